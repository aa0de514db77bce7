#ifndef FQG_FFIELD_HPP
#define FQG_FFIELD_HPP

// Finite fields, polynomials over them and exact linear algebra.

#include "fqg/extension_field.hpp"
#include "fqg/field.hpp"
#include "fqg/linalg.hpp"
#include "fqg/poly.hpp"

#endif  // FQG_FFIELD_HPP
