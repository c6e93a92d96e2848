#pragma once

// Kind 1: everything classical. Representative cipher is the XOR one-time
// pad; encryption and decryption coincide.

#include "qske/bitstring.hpp"

namespace qske {

inline BitString kind1_encrypt(const BitString& m, const BitString& k) { return m ^ k; }
inline BitString kind1_decrypt(const BitString& c, const BitString& k) { return c ^ k; }

}  // namespace qske
