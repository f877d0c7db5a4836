#pragma once

// Exact-arithmetic invariants of hyperplane and line arrangements:
// minimal degrees of Jacobian relations, Tjurina numbers, freeness
// classification, Ziegler restrictions, and mechanical checks of the
// addition-deletion theorems that govern them.

#include "logder/arrangement.hpp"
#include "logder/errors.hpp"
#include "logder/families.hpp"
#include "logder/incidence.hpp"
#include "logder/invariants.hpp"
#include "logder/matrix.hpp"
#include "logder/monomial.hpp"
#include "logder/polynomial.hpp"
#include "logder/rational.hpp"
#include "logder/report.hpp"
#include "logder/restriction.hpp"
#include "logder/syzygy.hpp"
#include "logder/verify.hpp"
