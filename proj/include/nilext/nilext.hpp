#pragma once

#include "nilext/scalar.hpp"
#include "nilext/linalg.hpp"
#include "nilext/expr.hpp"
#include "nilext/algebra.hpp"
#include "nilext/cohom.hpp"
#include "nilext/morphism.hpp"
#include "nilext/extension.hpp"
#include "nilext/oracle.hpp"
#include "nilext/format.hpp"
#include "nilext/catalog.hpp"
#include "nilext/verify.hpp"
