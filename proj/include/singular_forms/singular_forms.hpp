#pragma once

#include "singular_forms/errors.hpp"
#include "singular_forms/rational.hpp"
#include "singular_forms/monomial.hpp"
#include "singular_forms/order.hpp"
#include "singular_forms/polynomial.hpp"
#include "singular_forms/parser.hpp"
#include "singular_forms/groebner.hpp"
#include "singular_forms/module.hpp"
#include "singular_forms/hilbert.hpp"
#include "singular_forms/ideal.hpp"
#include "singular_forms/syzygy.hpp"
#include "singular_forms/presentation.hpp"
#include "singular_forms/exterior.hpp"
#include "singular_forms/grading.hpp"
#include "singular_forms/koszul.hpp"
#include "singular_forms/hypersurface.hpp"
#include "singular_forms/quotient.hpp"
#include "singular_forms/report.hpp"
