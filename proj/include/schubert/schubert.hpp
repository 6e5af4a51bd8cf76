#pragma once

#include "schubert/components.hpp"
#include "schubert/kl.hpp"
#include "schubert/linalg.hpp"
#include "schubert/permutation.hpp"
#include "schubert/polynomial.hpp"
#include "schubert/slice.hpp"
#include "schubert/smoothness.hpp"
#include "schubert/tangent.hpp"
#include "schubert/verify.hpp"
