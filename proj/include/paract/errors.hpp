#pragma once

#include <stdexcept>
#include <string>

namespace paract {

enum class errc {
    non_associative,
    no_identity_at_zero,
    missing_inverse,
    not_latin_square,
    not_a_subgroup,
    not_nested,
    not_normal,
    not_free,
    empty_subset,
    group_mismatch,
    r_not_equivalence,
    image_not_in_iota,
    not_a_section,
    bad_chain,
    bad_input,
};

inline const char* errc_name(errc c) {
    switch (c) {
    case errc::non_associative: return "NonAssociative";
    case errc::no_identity_at_zero: return "NoIdentityAtZero";
    case errc::missing_inverse: return "MissingInverse";
    case errc::not_latin_square: return "NotLatinSquare";
    case errc::not_a_subgroup: return "NotASubgroup";
    case errc::not_nested: return "NotNested";
    case errc::not_normal: return "NotNormal";
    case errc::not_free: return "NotFree";
    case errc::empty_subset: return "EmptySubset";
    case errc::group_mismatch: return "GroupMismatch";
    case errc::r_not_equivalence: return "RNotEquivalence";
    case errc::image_not_in_iota: return "ImageNotInIota";
    case errc::not_a_section: return "NotASection";
    case errc::bad_chain: return "BadChain";
    case errc::bad_input: return "BadInput";
    }
    return "Unknown";
}

/// Domain error: the input is well-formed but violates a hypothesis
/// (e.g. a non-free action handed to a section algorithm).
class error : public std::runtime_error {
public:
    error(errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

    errc code() const { return code_; }

private:
    errc code_;
};

} // namespace paract
