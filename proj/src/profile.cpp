#include "sqchoose/profile.hpp"

#include "sqchoose/errors.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>

namespace sqchoose {

Rational discharge_threshold(int lemma)
{
    switch (lemma) {
    case 1: return Rational(16, 7);
    case 2: return Rational(22, 9);
    case 3: return Rational(18, 7);
    case 4: return Rational(14, 5);
    case 5: return Rational(10, 3);
    case 6: return Rational(0);
    default: throw PreconditionError("lemma must be in 1..6, got " + std::to_string(lemma));
    }
}

ProfileTable::ProfileTable()
    : rows_{
          {1, 5, Rational(16, 7), 16, false},
          {2, 6, Rational(22, 9), 11, false},
          {3, 7, Rational(18, 7), 9, false},
          {4, 8, Rational(14, 5), 7, false},
          {5, 12, Rational(10, 3), 5, false},
          {6, 14, std::nullopt, 3, true},
      }
{
}

const LemmaProfile& ProfileTable::profile(int lemma) const
{
    for (const auto& row : rows_) {
        if (row.lemma == lemma) return row;
    }
    throw PreconditionError("no profile for lemma " + std::to_string(lemma));
}

namespace {

void commit(std::vector<LemmaProfile>& rows, std::map<std::string, std::string>& kv)
{
    if (kv.empty()) return;
    auto get_int = [&](const std::string& key) -> std::optional<long> {
        auto it = kv.find(key);
        if (it == kv.end()) return std::nullopt;
        try {
            return std::stol(it->second);
        } catch (const std::exception&) {
            throw PreconditionError("profile key '" + key + "' is not an integer");
        }
    };
    auto lemma = get_int("lemma");
    if (!lemma) throw PreconditionError("profile block without 'lemma'");
    auto it = std::find_if(rows.begin(), rows.end(),
                           [&](const LemmaProfile& p) { return p.lemma == *lemma; });
    LemmaProfile row;
    if (it != rows.end()) row = *it;
    row.lemma = static_cast<int>(*lemma);
    if (auto k = get_int("k")) row.k = static_cast<int>(*k);
    auto num = get_int("mad_num");
    auto den = get_int("mad_den");
    if (num || den) {
        if (!num || !den || *den <= 0) {
            throw PreconditionError("profile needs both mad_num and a positive mad_den");
        }
        row.mad_threshold = Rational(*num, *den);
    }
    if (auto girth = get_int("girth")) row.girth_threshold = static_cast<int>(*girth);
    if (auto planar = get_int("planar")) row.planar_required = *planar != 0;
    if (row.k <= 0) throw PreconditionError("profile k must be positive");
    if (it != rows.end()) {
        *it = row;
    } else {
        rows.push_back(row);
    }
    kv.clear();
}

}  // namespace

void ProfileTable::apply_overrides(std::istream& in)
{
    std::map<std::string, std::string> kv;
    std::string line;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line.resize(hash);
        std::istringstream row(line);
        std::string key;
        std::string value;
        if (!(row >> key)) {
            commit(rows_, kv);
            continue;
        }
        if (!key.empty() && key.back() == ':') key.pop_back();
        if (auto eq = key.find('='); eq != std::string::npos) {
            value = key.substr(eq + 1);
            key.resize(eq);
        } else if (!(row >> value)) {
            throw PreconditionError("profile key '" + key + "' has no value");
        }
        kv[key] = value;
    }
    commit(rows_, kv);
    std::sort(rows_.begin(), rows_.end(),
              [](const LemmaProfile& a, const LemmaProfile& b) { return a.k < b.k; });
}

void ProfileTable::apply_override_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in) throw PreconditionError("cannot open " + path);
    apply_overrides(in);
}

std::optional<LemmaProfile> ProfileTable::route(const Rational& mad) const
{
    for (const auto& row : rows_) {
        if (row.mad_threshold && mad < *row.mad_threshold) return row;
    }
    return std::nullopt;
}

}  // namespace sqchoose
