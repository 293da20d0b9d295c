#pragma once

#include <algorithm>
#include <atomic>
#include <exception>
#include <functional>
#include <mutex>
#include <set>
#include <string>
#include <thread>
#include <vector>

#include "qkseidel/nil_hecke.hpp"
#include "qkseidel/qk_model.hpp"

namespace qkseidel {

/// Evaluates f(0..n-1) on a pool of `jobs` threads. Results are stored by
/// index, so the output does not depend on scheduling. The first exception
/// thrown by any task is rethrown after the pool drains.
template <class F>
auto parallel_map(std::size_t n, unsigned jobs, F f) -> std::vector<decltype(f(std::size_t{}))> {
  using R = decltype(f(std::size_t{}));
  std::vector<R> out(n);
  if (jobs <= 1 || n <= 1) {
    for (std::size_t k = 0; k < n; ++k) out[k] = f(k);
    return out;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto worker = [&] {
    for (std::size_t k; (k = next.fetch_add(1)) < n;) {
      try {
        out[k] = f(k);
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!error) error = std::current_exception();
        next.store(n);
      }
    }
  };
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < std::min<std::size_t>(jobs, n); ++t) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
  return out;
}

struct SuiteResult {
  std::string name;
  std::size_t cases = 0;
  std::size_t failures = 0;
  std::string first_failure;

  bool ok() const { return failures == 0; }
  void record(bool holds, const std::string& what) {
    ++cases;
    if (!holds && failures++ == 0) first_failure = what;
  }
};

struct TheoremCase {
  int node;
  WeylElement w;
};

inline std::vector<TheoremCase> theorem_cases(const RootSystem& rs) {
  std::vector<TheoremCase> out;
  for (int i : special_nodes(rs))
    for (const auto& w : rs.elements()) out.push_back({i, w});
  return out;
}

inline std::vector<SeidelVerification> theorem_sweep(const PetersonModule& M, const std::vector<TheoremCase>& cases,
                                                     unsigned jobs) {
  return parallel_map(cases.size(), jobs, [&](std::size_t k) { return M.verify_seidel_theorem(cases[k].node, cases[k].w); });
}

/// Same, recording every success on the model's session.
inline std::vector<SeidelVerification> theorem_sweep(const QKModel& M, const std::vector<TheoremCase>& cases, unsigned jobs) {
  auto reps = parallel_map(cases.size(), jobs, [&](std::size_t k) { return M.verify(cases[k].node, cases[k].w); });
  M.record(reps);
  return reps;
}

inline SuiteResult summarize(const std::string& name, const RootSystem& rs, const std::vector<SeidelVerification>& reps) {
  SuiteResult r{name, 0, 0, {}};
  for (const auto& rep : reps)
    r.record(rep.verified(), "i=" + std::to_string(rep.node) + " w=" + word_to_string(rs.reduced_word(rep.w)) + ": " +
                                 rep.first_failure());
  return r;
}

/// Grassmannian elements of the non-extended affine Weyl group up to the
/// given length, grouped by length.
inline std::vector<std::vector<ExtAffineWeylElement>> grassmannian_layers(const ExtAffineWeyl& W, int max_length) {
  std::vector<std::vector<ExtAffineWeylElement>> layers{{W.identity()}};
  for (int len = 1; len <= max_length; ++len) {
    std::set<ExtAffineWeylElement> next;
    for (const auto& x : layers.back())
      for (int i : W.affine_nodes())
        if (W.is_left_ascent(i, x)) {
          ExtAffineWeylElement y = W.simple_reflection(i) * x;
          if (W.is_grassmannian(y)) next.insert(y);
        }
    layers.emplace_back(next.begin(), next.end());
  }
  return layers;
}

inline SuiteResult key_lemma_suite(const RootSystem& rs) {
  SuiteResult r{"descent coweight shift", 0, 0, {}};
  for (int i : special_nodes(rs))
    for (const auto& w : rs.elements()) r.record(verify_key_lemma(rs, i, w).holds, "i=" + std::to_string(i) + " w=" + word_to_string(rs.reduced_word(w)));
  return r;
}

inline SuiteResult group_lemma_suite(const ExtAffineWeyl& W) {
  const RootSystem& rs = W.root_system();
  SuiteResult r{"pi^{-1} w t_{gamma_w} = vw t_{gamma_vw}", 0, 0, {}};
  for (int i : special_nodes(rs))
    for (const auto& w : rs.elements()) r.record(verify_group_lemma(W, i, w).holds, "i=" + std::to_string(i) + " w=" + word_to_string(rs.reduced_word(w)));
  return r;
}

inline SuiteResult inversion_product_suite(const RootSystem& rs) {
  SuiteResult r{"inversion set of a product", 0, 0, {}};
  for (const auto& v : rs.elements())
    for (const auto& w : rs.elements())
      r.record(verify_inversion_product(rs, v, w),
               "v=" + word_to_string(rs.reduced_word(v)) + " w=" + word_to_string(rs.reduced_word(w)));
  return r;
}

inline SuiteResult seidel_inversion_suite(const ExtAffineWeyl& W) {
  const RootSystem& rs = W.root_system();
  SuiteResult r{"inversions of v[i]", 0, 0, {}};
  for (int i : special_nodes(rs)) {
    for (const auto& c : check_seidel_datum(W, seidel_datum(W, i))) r.record(c.holds, "i=" + std::to_string(i) + " " + c.name);
    r.record(verify_inversions_levi_stable(rs, i), "i=" + std::to_string(i) + " Levi stability");
  }
  return r;
}

inline SuiteResult inv_min_suite(const RootSystem& rs) {
  SuiteResult r{"inversions of the longest minimal representative", 0, 0, {}};
  for (int i : rs.nodes()) r.record(verify_inv_min(rs, i), "i=" + std::to_string(i));
  return r;
}

/// For x = w t_beta Grassmannian and i finite: (s_i x > x and s_i x
/// Grassmannian) iff s_i w < w.
inline SuiteResult grassmannian_ascent_suite(const ExtAffineWeyl& W, int max_length = 8) {
  const RootSystem& rs = W.root_system();
  SuiteResult r{"Grassmannian ascents (length <= " + std::to_string(max_length) + ")", 0, 0, {}};
  for (const auto& layer : grassmannian_layers(W, max_length))
    for (const auto& x : layer)
      for (int i : rs.nodes()) {
        bool lhs = W.is_left_ascent(i, x) && W.is_grassmannian(W.simple_reflection(i) * x);
        bool rhs = rs.is_left_descent(x.finite_part(), i);
        r.record(lhs == rhs, "i=" + std::to_string(i) + " x=" + word_to_string(W.reduced_word(x)));
      }
  return r;
}

/// ell_{sigma sigma'} = ell_sigma (u_sigma * ell_{sigma'}) for all sigma, sigma'.
inline SuiteResult sigma_product_suite(const PetersonModule& M) {
  const ExtAffineWeyl& W = M.group();
  SuiteResult r{"ell_{sigma sigma'} = ell_sigma (u_sigma * ell_sigma')", 0, 0, {}};
  for (const auto& s : W.sigma_group())
    for (const auto& t : W.sigma_group()) {
      WeylElement u = W.sigma_finite_part(s).second;
      PetersonElement lhs = M.mult_by_ell_sigma(s, M.star_w(u, M.ell(t.element)));
      r.record(lhs == M.ell(s.element * t.element),
               "sigma=" + std::to_string(s.image_of_zero) + " sigma'=" + std::to_string(t.image_of_zero));
    }
  return r;
}

inline SuiteResult phi_compatibility_suite(const PetersonModule& M) {
  const RootSystem& rs = M.root_system();
  SuiteResult r{"s_i * O^w against the left action", 0, 0, {}};
  for (const auto& w : rs.elements())
    for (int i : rs.nodes()) r.record(M.verify_phi_compatibility(i, w), "i=" + std::to_string(i) + " w=" + word_to_string(rs.reduced_word(w)));
  return r;
}

inline SuiteResult pushforward_suite(const QKModel& M, unsigned jobs) {
  const RootSystem& rs = M.root_system();
  std::vector<ParabolicData> ps = all_parabolics(rs);
  auto reps = parallel_map(ps.size(), jobs, [&](std::size_t k) {
    return std::make_pair(M.verify_pushforward_commutes(ps[k]), M.verify_two_routes(ps[k]));
  });
  SuiteResult r{"pushforward commutes with the left action", 0, 0, {}};
  for (std::size_t k = 0; k < ps.size(); ++k) {
    std::string tag = "P={";
    for (std::size_t a = 0; a < ps[k].nodes.size(); ++a) tag += (a ? "," : "") + std::to_string(ps[k].nodes[a]);
    tag += "}";
    const auto& [rep, routes] = reps[k];
    r.record(rep.ok(), tag + " " + rep.first_failure);
    r.record(routes, tag + " two routes disagree");
  }
  return r;
}

inline SuiteResult nil_hecke_suite(const NilHecke& H) {
  const ExtAffineWeyl& W = H.group();
  SuiteResult r{"Demazure idempotence and braid relations", 0, 0, {}};
  for (int a : W.affine_nodes()) {
    r.record(H.idempotent(a), "D_" + std::to_string(a) + "^2");
    for (int b : W.affine_nodes())
      if (a < b && W.braid_order(a, b) > 0)
        r.record(H.braid_relation_holds(a, b), "braid " + std::to_string(a) + "," + std::to_string(b));
  }
  // scalars do not commute with D_i
  for (int a : W.affine_nodes()) {
    GroupAlgebraElement f = H.scalar(LaurentPoly::monomial(W.level_zero_root(a)));
    r.record(!(H.demazure(a) * f == f * H.demazure(a)), "D_" + std::to_string(a) + " commutes with e^alpha");
  }
  return r;
}

}  // namespace qkseidel
