#ifndef LEXPLUS_LEXPLUS_HPP
#define LEXPLUS_LEXPLUS_HPP

// Umbrella header.

#include "lexplus/egh.hpp"
#include "lexplus/errors.hpp"
#include "lexplus/ideal.hpp"
#include "lexplus/kruskal_katona.hpp"
#include "lexplus/linkage.hpp"
#include "lexplus/lpp.hpp"
#include "lexplus/macaulay.hpp"
#include "lexplus/monomial.hpp"
#include "lexplus/piece.hpp"

#endif
