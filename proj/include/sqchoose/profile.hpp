#pragma once

#include "sqchoose/rational.hpp"

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace sqchoose {

/// One column of the bounds table: lists of size k suffice for G^2 when
/// mad(G) is strictly below `mad_threshold` (or G is plane, for lemma 6).
struct LemmaProfile {
    int lemma = 0;
    int k = 0;
    std::optional<Rational> mad_threshold;
    std::optional<int> girth_threshold;
    bool planar_required = false;

    friend bool operator==(const LemmaProfile&, const LemmaProfile&) = default;
};

/// Final-charge bound the discharging argument for `lemma` must reach:
/// the mad threshold for lemmas 1-5, zero for lemma 6.
Rational discharge_threshold(int lemma);

class ProfileTable {
public:
    /// The six built-in rows.
    ProfileTable();

    const LemmaProfile& profile(int lemma) const;
    const std::vector<LemmaProfile>& rows() const { return rows_; }

    /// Replace or add rows from `key value` lines (`lemma`, `k`, `mad_num`,
    /// `mad_den`, `girth`, `planar`); rows are separated by blank lines.
    void apply_overrides(std::istream& in);
    void apply_override_file(const std::string& path);

    /// First mad-routed row (ascending k) whose threshold is strictly above
    /// `mad`. Rows without a threshold are never selected this way.
    std::optional<LemmaProfile> route(const Rational& mad) const;

private:
    std::vector<LemmaProfile> rows_;
};

}  // namespace sqchoose
