#pragma once

#include "schubert/common.hpp"
#include "schubert/divided.hpp"
#include "schubert/expansion.hpp"
#include "schubert/monomial.hpp"
#include "schubert/polynomial.hpp"
#include "schubert/schubert.hpp"
#include "schubert/verify.hpp"
#include "schubert/word.hpp"
