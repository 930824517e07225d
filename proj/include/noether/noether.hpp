#ifndef NOETHER_NOETHER_HPP
#define NOETHER_NOETHER_HPP

#include "noether/corpus.hpp"
#include "noether/groebner.hpp"
#include "noether/ideal.hpp"
#include "noether/ideal_file.hpp"
#include "noether/json_io.hpp"
#include "noether/matrix_class.hpp"
#include "noether/monomial_ideal.hpp"
#include "noether/parse.hpp"
#include "noether/polynomial.hpp"
#include "noether/presentation.hpp"
#include "noether/rational.hpp"
#include "noether/ring.hpp"
#include "noether/verify.hpp"
#include "noether/zring.hpp"

#endif
