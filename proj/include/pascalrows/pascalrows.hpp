#pragma once

#include "borrow.hpp"
#include "digit_word.hpp"
#include "errors.hpp"
#include "formula.hpp"
#include "formula_io.hpp"
#include "kernel_rank.hpp"
#include "partitions.hpp"
#include "primes.hpp"
#include "rational.hpp"
