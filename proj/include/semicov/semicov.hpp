#ifndef SEMICOV_SEMICOV_HPP
#define SEMICOV_SEMICOV_HPP

#include "semicov/coe.hpp"
#include "semicov/error.hpp"
#include "semicov/export.hpp"
#include "semicov/family.hpp"
#include "semicov/numerical_semigroup.hpp"
#include "semicov/oracle.hpp"
#include "semicov/theta.hpp"

#endif  // SEMICOV_SEMICOV_HPP
