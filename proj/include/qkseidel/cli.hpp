#pragma once

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "qkseidel/sweeps.hpp"

namespace qkseidel::cli {

using Json = nlohmann::ordered_json;

enum ExitCode : int { pass = 0, check_failed = 1, invalid_input = 2, budget_exceeded = 3 };

enum class Format { json, latex, text };

struct JobSpec {
  std::string command;  ///< table, verify, element or sweep
  std::string type;
  int rank = 0;
  std::optional<int> node;
  std::optional<std::string> word;
  std::optional<std::string> parabolic;
  std::string checks = "theorem";
  Format format = Format::json;
  unsigned jobs = 1;
  std::optional<std::size_t> term_budget;
  std::optional<std::string> out;
};

/// One report row; the key order of to_json is the published schema.
struct Record {
  std::string type;
  int rank = 0;
  std::optional<int> node;
  Word w_word;
  std::vector<int> q_exponent;
  Word product_word;
  bool verified = false;
  Json details = Json::object();
};

inline Json to_json(const Record& r) {
  Json j;
  j["type"] = r.type;
  j["rank"] = r.rank;
  j["node"] = r.node ? Json(*r.node) : Json(nullptr);
  j["w_word"] = r.w_word;
  j["q_exponent"] = r.q_exponent;
  j["product_word"] = r.product_word;
  j["verified"] = r.verified;
  j["details"] = r.details;
  return j;
}

inline Word parse_word(const std::string& text, int rank) {
  Word out;
  if (text.empty() || text == "e") return out;
  std::stringstream ss(text);
  for (std::string tok; std::getline(ss, tok, ',');) {
    std::size_t used = 0;
    int k = 0;
    try {
      k = std::stoi(tok, &used);
    } catch (const std::exception&) {
      throw InvalidInput("bad word entry '" + tok + "'");
    }
    if (used != tok.size()) throw InvalidInput("bad word entry '" + tok + "'");
    if (k < 1 || k > rank) throw InvalidInput("word entry " + std::to_string(k) + " outside 1.." + std::to_string(rank));
    out.push_back(k);
  }
  return out;
}

inline std::vector<int> coords(const QExponent& v) { return v.coords(); }

// ---- text and LaTeX rendering ---------------------------------------------

inline std::string weyl_label(const RootSystem& rs, const WeylElement& w, bool latex) {
  if (w.is_identity()) return "e";
  if (w == rs.longest_element()) return latex ? "w_\\circ" : "w0";
  std::string s;
  for (int k : rs.reduced_word(w)) s += latex ? "s_" + std::to_string(k) : "s" + std::to_string(k);
  return s;
}

inline std::string product_label(const RootSystem& rs, const QExponent& beta, const WeylElement& w, bool latex) {
  std::string q;
  for (std::size_t j = 0; j < beta.size(); ++j) {
    if (beta[j] == 0) continue;
    q += latex ? "Q_" + std::to_string(j + 1) : "Q" + std::to_string(j + 1);
    if (beta[j] != 1) q += "^" + std::to_string(beta[j]);
    if (!latex) q += " ";
  }
  if (w.is_identity()) {
    if (q.empty()) return "1";
    if (!latex) q.pop_back();
    return q;
  }
  std::string o = latex ? "\\mathbb{O}^{" + weyl_label(rs, w, true) + "}" : "O^{" + weyl_label(rs, w, false) + "}";
  if (latex && !q.empty()) q += "\\,";
  return q + o;
}

// ---- commands -------------------------------------------------------------

struct Report {
  std::vector<Record> records;
  bool single = false;       ///< emit one object instead of an array
  std::string latex;         ///< table layout, when available
  std::vector<std::string> text_lines;
  bool ok() const {
    for (const auto& r : records)
      if (!r.verified) return false;
    return true;
  }
};

inline Record base_record(const JobSpec& job, const RootSystem& rs) {
  Record r;
  r.type = std::string(1, rs.name()[0]);
  r.rank = rs.rank();
  r.node = job.node;
  return r;
}

inline ParabolicData parabolic_of(const JobSpec& job, const RootSystem& rs) {
  if (!job.parabolic) return make_parabolic(rs, {});
  return make_parabolic(rs, parse_word(*job.parabolic, rs.rank()));
}

inline Report run_table(const JobSpec& job, const RootSystem& rs) {
  if (!job.node) throw InvalidInput("table needs --node");
  const int i = *job.node;
  require_special(rs, i);
  QKModel M(rs);
  ParabolicData P = parabolic_of(job, rs);
  std::vector<TheoremCase> cases;
  for (const auto& w : P.min_reps)
    if (!w.is_identity()) cases.push_back({i, w});
  auto reps = theorem_sweep(M, cases, job.jobs);

  Report out;
  std::string head, body;
  for (std::size_t k = 0; k < cases.size(); ++k) {
    const WeylElement& w = cases[k].w;
    Record r = base_record(job, rs);
    r.w_word = rs.reduced_word(w);
    QExponent beta = reps[k].q_exponent;
    WeylElement prod = reps[k].product;
    r.verified = reps[k].verified();
    if (!P.is_borel()) {
      QKElement e = M.seidel_product_parabolic_direct(i, w, P);
      const auto& key = e.terms().begin()->first;
      beta = key.first;
      prod = key.second;
      r.details["parabolic"] = P.nodes;
    }
    r.q_exponent = coords(beta);
    r.product_word = rs.reduced_word(prod);
    r.details["descents_w"] = rs.descent_set(w);
    r.details["descents_product"] = rs.descent_set(prod);
    if (!r.verified) r.details["first_failure"] = reps[k].first_failure();
    out.records.push_back(r);

    head += std::string(k ? "\n& " : "") + "$" + weyl_label(rs, w, true) + "$";
    body += std::string(k ? "\n& " : "") + "$" + product_label(rs, beta, prod, true) + "$";
    out.text_lines.push_back(weyl_label(rs, w, false) + " -> " + product_label(rs, beta, prod, false) +
                             (r.verified ? "" : "  [FAILED]"));
  }
  std::string cols;
  for (std::size_t k = 0; k < cases.size(); ++k) cols += k ? "|c" : "c";
  out.latex = "\\begin{center}\n\\renewcommand{\\arraystretch}{1.4}\n\\begin{tabular}{" + cols + "}\n" + head +
              " \\\\ \\hline\n" + body + "\n\\end{tabular}\n\\end{center}\n";
  return out;
}

inline Json checks_json(const std::vector<CheckResult>& checks) {
  Json a = Json::array();
  for (const auto& c : checks) {
    Json j;
    j["name"] = c.name;
    j["holds"] = c.holds;
    j["detail"] = c.detail;
    a.push_back(j);
  }
  return a;
}

inline bool wants(const JobSpec& job, const std::string& check) {
  std::stringstream ss(job.checks);
  for (std::string tok; std::getline(ss, tok, ',');)
    if (tok == check) return true;
  return false;
}

inline Report run_verify(const JobSpec& job, const RootSystem& rs) {
  {
    std::stringstream ss(job.checks);
    for (std::string tok; std::getline(ss, tok, ',');)
      if (tok != "theorem" && tok != "key" && tok != "pushforward") throw InvalidInput("unknown check '" + tok + "'");
  }
  QKModel M(rs);
  std::vector<int> nodes = job.node ? std::vector<int>{*job.node} : special_nodes(rs);
  std::vector<WeylElement> ws;
  if (job.word)
    ws.push_back(rs.from_word(parse_word(*job.word, rs.rank())));
  else
    ws = rs.elements();

  Report out;
  if (wants(job, "theorem") || wants(job, "key")) {
    for (int i : nodes) require_special(rs, i);
    std::vector<TheoremCase> cases;
    for (int i : nodes)
      for (const auto& w : ws) cases.push_back({i, w});
    std::vector<SeidelVerification> reps;
    if (wants(job, "theorem")) reps = theorem_sweep(M, cases, job.jobs);
    for (std::size_t k = 0; k < cases.size(); ++k) {
      const auto& [i, w] = cases[k];
      Record r = base_record(job, rs);
      r.node = i;
      r.w_word = rs.reduced_word(w);
      r.product_word = rs.reduced_word(seidel_element(rs, i) * w);
      std::vector<CheckResult> checks;
      if (wants(job, "theorem")) {
        checks = reps[k].checks;
        r.q_exponent = coords(reps[k].q_exponent);
        r.details["star_support"] = reps[k].star_support;
      } else {
        r.q_exponent = coords(quantum_exponent(rs, i, w));
        checks.push_back(verify_key_lemma(rs, i, w));
      }
      r.verified = true;
      for (const auto& c : checks) r.verified = r.verified && c.holds;
      r.details["checks"] = checks_json(checks);
      out.text_lines.push_back(std::string(r.verified ? "PASS" : "FAIL") + " " + rs.name() + " i=" + std::to_string(i) +
                               " w=" + weyl_label(rs, w, false) + " -> " +
                               product_label(rs, quantum_exponent(rs, i, w), seidel_element(rs, i) * w, false));
      out.records.push_back(r);
    }
  }
  if (wants(job, "pushforward")) {
    std::vector<ParabolicData> ps;
    if (job.parabolic)
      ps.push_back(parabolic_of(job, rs));
    else
      ps = all_parabolics(rs);
    for (const auto& P : ps) {
      PushforwardReport rep = M.verify_pushforward_commutes(P);
      bool routes = M.verify_two_routes(P);
      Record r = base_record(job, rs);
      r.node.reset();
      r.verified = rep.ok() && routes;
      r.details["parabolic"] = P.nodes;
      r.details["cases"] = rep.cases;
      r.details["failures"] = rep.failures;
      r.details["exchange_lemma"] = rep.std_lemma_holds;
      r.details["minrep_criterion"] = rep.minrep_equivalence_holds;
      r.details["two_routes_agree"] = routes;
      if (!rep.first_failure.empty()) r.details["first_failure"] = rep.first_failure;
      out.text_lines.push_back(std::string(r.verified ? "PASS" : "FAIL") + " " + rs.name() + " pushforward P=" +
                               Json(P.nodes).dump() + " (" + std::to_string(rep.cases) + " cases)");
      out.records.push_back(r);
    }
  }
  return out;
}

inline Report run_element(const JobSpec& job, const RootSystem& rs) {
  if (!job.word) throw InvalidInput("element needs --word");
  ExtAffineWeyl W(rs);
  WeylElement w = rs.from_word(parse_word(*job.word, rs.rank()));
  Record r = base_record(job, rs);
  r.w_word = rs.reduced_word(w);
  r.verified = true;
  if (job.node) {
    require_special(rs, *job.node);
    r.q_exponent = coords(quantum_exponent(rs, *job.node, w));
    r.product_word = rs.reduced_word(seidel_element(rs, *job.node) * w);
  }
  r.details["length"] = rs.length(w);
  if (std::string("ABCD").find(rs.type_label()) != std::string::npos)
    r.details["one_line"] = rs.one_line(w);
  r.details["descents"] = rs.descent_set(w);
  Json inv = Json::array();
  for (const auto& a : rs.inversions(w)) inv.push_back(a.coords());
  r.details["inversions"] = inv;
  Coweight gamma = descent_coweight(rs, w);
  r.details["gamma"] = gamma.coords();
  SigmaDecomposition d = W.sigma_decompose(W.finite(w) * W.translation(gamma));
  Json sd;
  sd["sigma"] = d.sigma.image_of_zero;
  sd["word"] = d.word;
  r.details["sigma_decomposition"] = sd;

  Report out;
  out.single = true;
  out.text_lines.push_back("w = " + weyl_label(rs, w, false) + "  length " + std::to_string(rs.length(w)));
  out.text_lines.push_back("Des(w) = " + Json(rs.descent_set(w)).dump());
  out.text_lines.push_back("Inv(w) = " + inv.dump());
  out.text_lines.push_back("gamma_w = " + Json(gamma.coords()).dump());
  out.text_lines.push_back("w t_gamma = pi[" + std::to_string(d.sigma.image_of_zero) + "] " + word_to_string(d.word));
  if (r.details.contains("one_line")) out.text_lines.push_back("one-line " + r.details["one_line"].dump());
  if (job.node)
    out.text_lines.push_back("Seidel product: " +
                             product_label(rs, quantum_exponent(rs, *job.node, w), seidel_element(rs, *job.node) * w, false));
  out.records.push_back(r);
  return out;
}

inline Report run_sweep(const JobSpec& job, const RootSystem& rs) {
  QKModel M(rs);
  const PetersonModule& P = M.peterson();
  const ExtAffineWeyl& W = P.group();
  std::vector<SuiteResult> suites;
  suites.push_back(summarize("Seidel product theorem", rs, theorem_sweep(M, theorem_cases(rs), job.jobs)));
  suites.push_back(key_lemma_suite(rs));
  suites.push_back(group_lemma_suite(W));
  suites.push_back(inversion_product_suite(rs));
  suites.push_back(seidel_inversion_suite(W));
  suites.push_back(inv_min_suite(rs));
  suites.push_back(grassmannian_ascent_suite(W));
  suites.push_back(sigma_product_suite(P));
  suites.push_back(phi_compatibility_suite(P));
  suites.push_back(pushforward_suite(M, job.jobs));
  Report out;
  for (const auto& s : suites) {
    Record r = base_record(job, rs);
    r.node.reset();
    r.verified = s.ok();
    r.details["suite"] = s.name;
    r.details["cases"] = s.cases;
    r.details["failures"] = s.failures;
    if (!s.ok()) r.details["first_failure"] = s.first_failure;
    out.text_lines.push_back(std::string(s.ok() ? "PASS" : "FAIL") + " " + rs.name() + " " + s.name + " (" +
                             std::to_string(s.cases) + " cases)" + (s.ok() ? "" : ": " + s.first_failure));
    out.records.push_back(r);
  }
  return out;
}

inline std::string render(const Report& rep, Format f) {
  if (f == Format::json) {
    Json a = Json::array();
    for (const auto& r : rep.records) a.push_back(to_json(r));
    return (rep.single && a.size() == 1 ? a[0] : a).dump(2) + "\n";
  }
  if (f == Format::latex) {
    if (!rep.latex.empty()) return rep.latex;
    throw InvalidInput("latex output is only available for table");
  }
  std::string s;
  for (const auto& line : rep.text_lines) s += line + "\n";
  return s;
}

/// Runs a parsed job. Reports go to `out` (or --out), diagnostics to `err`.
inline int run(const JobSpec& job, std::ostream& out, std::ostream& err) {
  struct BudgetGuard {
    std::size_t saved = term_budget().load();
    ~BudgetGuard() { term_budget().store(saved); }
  } guard;
  try {
    if (job.type.size() != 1) throw InvalidInput("type must be a single letter A-G");
    if (job.term_budget) term_budget().store(*job.term_budget);
    RootSystem rs = RootSystem::build(job.type[0], job.rank);
    if (job.node && !rs.valid_node(*job.node))
      throw InvalidInput("node " + std::to_string(*job.node) + " outside 1.." + std::to_string(rs.rank()));
    Report rep;
    if (job.command == "table")
      rep = run_table(job, rs);
    else if (job.command == "verify")
      rep = run_verify(job, rs);
    else if (job.command == "element")
      rep = run_element(job, rs);
    else if (job.command == "sweep")
      rep = run_sweep(job, rs);
    else
      throw InvalidInput("unknown command '" + job.command + "'");
    std::string text = render(rep, job.format);
    if (job.out) {
      std::ofstream f(*job.out, std::ios::binary);
      if (!f) throw InvalidInput("cannot open " + *job.out);
      f << text;
    } else {
      out << text;
    }
    if (!rep.ok()) {
      err << "some checks failed\n";
      return check_failed;
    }
    return pass;
  } catch (const InvalidInput& e) {
    err << "error: " << e.what() << "\n";
    return invalid_input;
  } catch (const BudgetExceeded& e) {
    err << "term budget exceeded: " << e.what() << "\n";
    return budget_exceeded;
  } catch (const VerificationError& e) {
    err << "verification failed: " << e.what() << "\n";
    return check_failed;
  }
}

/// Parses argv and runs the job.
inline int main(int argc, const char* const* argv, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
  CLI::App app{"Seidel products in equivariant quantum K-theory of flag varieties"};
  app.require_subcommand(1);
  JobSpec job;
  job.jobs = std::max(1u, std::thread::hardware_concurrency());
  std::map<std::string, Format> formats{{"json", Format::json}, {"latex", Format::latex}, {"text", Format::text}};

  auto common = [&](CLI::App* sub) {
    sub->add_option("--type", job.type, "Cartan type letter (A-G)")->required();
    sub->add_option("--rank", job.rank, "rank")->required();
    sub->add_option("--format", job.format, "json, latex or text")->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
    sub->add_option("--jobs", job.jobs, "worker threads")->check(CLI::PositiveNumber);
    sub->add_option("--term-budget", job.term_budget, "maximum number of terms per Laurent polynomial");
    sub->add_option("--out", job.out, "write the report to this file");
  };
  CLI::App* table = app.add_subcommand("table", "Seidel product table for a special node");
  common(table);
  table->add_option("--node", job.node, "special node")->required();
  table->add_option("--parabolic", job.parabolic, "comma-separated nodes of the parabolic subgroup");

  CLI::App* verify = app.add_subcommand("verify", "verify the product formula and related identities");
  common(verify);
  verify->add_option("--node", job.node, "special node (default: all)");
  verify->add_option("--word", job.word, "comma-separated reduced word (default: all of W)");
  verify->add_option("--parabolic", job.parabolic, "parabolic for the pushforward check (default: all)");
  verify->add_option("--checks", job.checks, "comma-separated: theorem, key, pushforward");

  CLI::App* element = app.add_subcommand("element", "inspect a Weyl group element");
  common(element);
  element->add_option("--word", job.word, "comma-separated word")->required();
  element->add_option("--node", job.node, "special node for the Seidel product");

  CLI::App* sweep = app.add_subcommand("sweep", "run every invariant suite for a type");
  common(sweep);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? pass : invalid_input;
  }
  for (CLI::App* sub : {table, verify, element, sweep})
    if (sub->parsed()) job.command = sub->get_name();
  return run(job, out, err);
}

}  // namespace qkseidel::cli
