#pragma once

// Exact combinatorics of multipartitions, crystal operators, combinatorial
// Fock spaces, and canonical bases with graded decomposition matrices.

#include "cfock/canonical.hpp"
#include "cfock/crystal.hpp"
#include "cfock/errors.hpp"
#include "cfock/fock.hpp"
#include "cfock/io.hpp"
#include "cfock/laurent.hpp"
#include "cfock/partition.hpp"
#include "cfock/verify.hpp"
