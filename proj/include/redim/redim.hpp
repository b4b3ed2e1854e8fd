#ifndef REDIM_REDIM_HPP
#define REDIM_REDIM_HPP

#include "redim/atlas.hpp"
#include "redim/bijection.hpp"
#include "redim/codec.hpp"
#include "redim/expansion.hpp"
#include "redim/linear_solve.hpp"
#include "redim/pairing.hpp"
#include "redim/rational.hpp"
#include "redim/sampling.hpp"
#include "redim/transport.hpp"
#include "redim/tuple.hpp"
#include "redim/verify.hpp"

#endif  // REDIM_REDIM_HPP
