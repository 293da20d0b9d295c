#pragma once

#include "qkseidel/lattice.hpp"
#include "qkseidel/rootsys.hpp"
#include "qkseidel/affine_weyl.hpp"
#include "qkseidel/laurent.hpp"
#include "qkseidel/nil_hecke.hpp"
#include "qkseidel/seidel.hpp"
#include "qkseidel/peterson.hpp"
#include "qkseidel/qk_model.hpp"
#include "qkseidel/sweeps.hpp"
