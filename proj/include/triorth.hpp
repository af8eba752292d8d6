#ifndef TRIORTH_HPP
#define TRIORTH_HPP

#include "triorth/codes.hpp"
#include "triorth/errors.hpp"
#include "triorth/gf2.hpp"
#include "triorth/poset.hpp"
#include "triorth/quantum.hpp"
#include "triorth/triortho.hpp"

#endif  // TRIORTH_HPP
