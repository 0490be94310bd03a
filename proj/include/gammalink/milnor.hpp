#pragma once

#include <gammalink/numeric.hpp>
#include <gammalink/sequence.hpp>

#include <string>
#include <vector>

namespace gammalink {

/// Class of mu-bar(1^k 2 3) read off gamma^k. modulus 0 means the value is an
/// exact integer; otherwise 0 <= residue < modulus.
struct MilnorResidue {
    std::size_t index = 0;
    Integer modulus;
    Integer residue;

    bool exact() const { return sgn(modulus) == 0; }

    friend bool operator==(const MilnorResidue& a, const MilnorResidue& b) {
        return a.index == b.index && a.modulus == b.modulus && a.residue == b.residue;
    }

    std::string str() const {
        if (exact()) return std::to_string(index) + " exact " + residue.get_str();
        return std::to_string(index) + " mod " + modulus.get_str() + " " + residue.get_str();
    }
};

/// Residue of s_k modulo gcd{|s_i| : i < k}. The gcd over the gamma prefix equals
/// the gcd over the Milnor prefix because each gamma^i differs from its Milnor
/// invariant by a multiple of the preceding gcd.
inline std::vector<MilnorResidue> milnor_residues(const GammaSeq& s) {
    std::vector<MilnorResidue> out;
    out.reserve(s.order() + 1);
    Integer m = 0;
    for (std::size_t k = 0; k <= s.order(); ++k) {
        MilnorResidue r;
        r.index = k;
        r.modulus = m;
        r.residue = (sgn(m) == 0) ? s[k] : mod_nonneg(s[k], m);
        out.push_back(std::move(r));
        mpz_gcd(m.get_mpz_t(), m.get_mpz_t(), s[k].get_mpz_t());
    }
    return out;
}

}  // namespace gammalink
