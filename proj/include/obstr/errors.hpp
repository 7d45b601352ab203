#pragma once
#include <stdexcept>
#include <string>

namespace obstr {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// two blocks of a set-partition triple share two or more elements
struct IntersectionViolation : Error { using Error::Error; };

// a search exceeded its node budget
struct LimitExceeded : Error { using Error::Error; };

// a determinant block is wider than the ambient dimension allows
struct BlockTooLarge : Error { using Error::Error; };

// an input size is outside the supported range
struct ScaleExceeded : Error { using Error::Error; };

// a certificate witness evaluated to zero, so it certifies nothing
struct WitnessVanished : Error { using Error::Error; };

// contributions that a certificate needs to agree were found to disagree
struct CancellationDetected : Error { using Error::Error; };

// a candidate set fails the structural test required of it
struct InvalidSet : Error { using Error::Error; };

} // namespace obstr
