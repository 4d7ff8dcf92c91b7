#pragma once

#include "superlie/errors.hpp"
#include "superlie/scalar.hpp"
#include "superlie/parity.hpp"
#include "superlie/linalg.hpp"
#include "superlie/algebra.hpp"
#include "superlie/quadratic.hpp"
#include "superlie/cochain.hpp"
#include "superlie/poisson.hpp"
#include "superlie/cohomology.hpp"
#include "superlie/extensions.hpp"
#include "superlie/sp2.hpp"
#include "superlie/catalog.hpp"
#include "superlie/io.hpp"
