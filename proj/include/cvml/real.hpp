#pragma once

namespace cvml {

// Scalar type of tensor storage. The default build is single precision; the
// CVML_DOUBLE variant exists for finite-difference gradient checking.
#ifdef CVML_DOUBLE
using real = double;
#else
using real = float;
#endif

}  // namespace cvml
