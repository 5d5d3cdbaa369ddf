#include "autocf/seqcore.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <stdexcept>

#include "autocf/errors.hpp"

namespace autocf::seqcore {

std::string to_string(const Word& word) {
    std::string out;
    out.reserve(word.size());
    for (const auto& c : word) {
        out += c.name;
    }
    return out;
}

namespace {

bool is_letter_char(char c) {
    return c >= 'a' && c <= 'y';
}

}  // namespace

EpsSpec::EpsSpec(std::string_view preperiod, std::string_view period) {
    if (period.empty()) {
        throw std::invalid_argument("period must contain at least one letter");
    }
    auto intern = [this](char name) {
        if (!is_letter_char(name)) {
            throw std::invalid_argument(std::string("invalid letter '") + name + "'");
        }
        for (const auto& c : alphabet_) {
            if (c.name == name) {
                return c;
            }
        }
        Letter c{static_cast<int>(alphabet_.size()), name};
        alphabet_.push_back(c);
        return c;
    };
    for (char name : preperiod) {
        preperiod_.push_back(intern(name));
    }
    for (char name : period) {
        period_.push_back(intern(name));
    }
}

EpsSpec EpsSpec::parse(std::string_view text) {
    const auto open = text.find('(');
    if (open == std::string_view::npos) {
        throw ParseError("expected '('", text.size());
    }
    for (std::size_t i = 0; i < open; ++i) {
        if (!is_letter_char(text[i])) {
            throw ParseError(std::string("invalid letter '") + text[i] + "'", i);
        }
    }
    std::size_t i = open + 1;
    while (i < text.size() && is_letter_char(text[i])) {
        ++i;
    }
    if (i == open + 1) {
        throw ParseError("empty period", i);
    }
    if (i >= text.size() || text[i] != ')') {
        throw ParseError("expected ')'", i);
    }
    if (i + 1 != text.size()) {
        throw ParseError("trailing characters", i + 1);
    }
    return EpsSpec(text.substr(0, open), text.substr(open + 1, i - open - 1));
}

Letter EpsSpec::eps(std::uint64_t index) const {
    if (index < preperiod_.size()) {
        return preperiod_[index];
    }
    return period_[(index - preperiod_.size()) % period_.size()];
}

Letter EpsSpec::letter(char name) const {
    for (const auto& c : alphabet_) {
        if (c.name == name) {
            return c;
        }
    }
    throw std::invalid_argument(std::string("letter '") + name + "' not in alphabet");
}

bool EpsSpec::letters_distinct() const {
    return alphabet_.size() == preperiod_.size() + period_.size();
}

EpsSpec EpsSpec::shifted(std::size_t j) const {
    std::string pre;
    std::string per;
    if (j < preperiod_.size()) {
        for (std::size_t i = j; i < preperiod_.size(); ++i) {
            pre += preperiod_[i].name;
        }
        for (const auto& c : period_) {
            per += c.name;
        }
    } else {
        const std::size_t r = (j - preperiod_.size()) % period_.size();
        for (std::size_t i = 0; i < period_.size(); ++i) {
            per += period_[(r + i) % period_.size()].name;
        }
    }
    return EpsSpec(pre, per);
}

EpsSpec EpsSpec::minimized() const {
    const std::size_t d = period_.size();
    std::size_t p = d;
    for (std::size_t q = 1; q < d; ++q) {
        if (d % q != 0) {
            continue;
        }
        bool periodic = true;
        for (std::size_t i = q; i < d && periodic; ++i) {
            periodic = period_[i] == period_[i - q];
        }
        if (periodic) {
            p = q;
            break;
        }
    }
    std::string pre;
    for (const auto& c : preperiod_) {
        pre += c.name;
    }
    std::string per;
    for (std::size_t i = 0; i < p; ++i) {
        per += period_[i].name;
    }
    // fold trailing preperiod letters into a rotated period
    while (!pre.empty() && pre.back() == per.back()) {
        per.insert(per.begin(), per.back());
        per.pop_back();
        pre.pop_back();
    }
    return EpsSpec(pre, per);
}

std::string EpsSpec::to_string() const {
    std::string out;
    for (const auto& c : preperiod_) {
        out += c.name;
    }
    out += '(';
    for (const auto& c : period_) {
        out += c.name;
    }
    out += ')';
    return out;
}

EpsSpec relabel_distinct(const EpsSpec& spec) {
    const std::size_t l = spec.preperiod_length();
    const std::size_t d = spec.period_length();
    if (l + d > 25) {
        throw ResourceError("relabel_distinct supports at most 25 slots");
    }
    std::string pre;
    std::string per;
    for (std::size_t i = 0; i < l; ++i) {
        pre += static_cast<char>('a' + i);
    }
    for (std::size_t i = 0; i < d; ++i) {
        per += static_cast<char>('a' + l + i);
    }
    return EpsSpec(pre, per);
}

Letter letter_at(const EpsSpec& spec, std::uint64_t n) {
    return spec.eps(static_cast<std::uint64_t>(std::countr_zero(n + 1)));
}

Word build_word(const EpsSpec& spec, int n) {
    if (n < 0) {
        throw std::invalid_argument("word order must be nonnegative");
    }
    if (n > kMaxWordOrder) {
        throw ResourceError("W_" + std::to_string(n) + " exceeds the supported length 2^" +
                            std::to_string(kMaxWordOrder) + " - 1");
    }
    Word word;
    word.reserve((std::size_t{1} << n) - 1);
    for (int k = 0; k < n; ++k) {
        const std::size_t half = word.size();
        word.push_back(spec.eps(static_cast<std::uint64_t>(k)));
        word.insert(word.end(), word.begin(), word.begin() + static_cast<std::ptrdiff_t>(half));
    }
    return word;
}

Word stream_prefix(const EpsSpec& spec, std::size_t length) {
    Word word;
    word.reserve(length);
    for (std::size_t n = 0; n < length; ++n) {
        word.push_back(letter_at(spec, n));
    }
    return word;
}

PositionSet positions(const EpsSpec& spec, Letter c, std::uint64_t horizon) {
    PositionSet out{horizon, {}};
    for (std::uint64_t n = 0; n < horizon; ++n) {
        if (letter_at(spec, n) == c) {
            out.indices.push_back(n);
        }
    }
    return out;
}

namespace {

// P_0 below horizon from the recursion, given a seed that is exact below seed_horizon.
std::vector<bool> first_slot_mask(std::size_t l, std::size_t d, std::uint64_t horizon,
                                  const std::vector<std::uint64_t>& seed) {
    std::vector<bool> mask(horizon, false);
    for (auto k : seed) {
        if (k < horizon) {
            mask[k] = true;
        }
    }
    // {(2k+1) 2^l - 1 | k >= 1}
    if (l < 63) {
        const std::uint64_t step = std::uint64_t{1} << l;
        for (std::uint64_t k = 1;; ++k) {
            const std::uint64_t x = (2 * k + 1) * step - 1;
            if (x >= horizon) {
                break;
            }
            mask[x] = true;
        }
    }
    // {2k+1 | k in P_{d-1}} with P_{d-1} = 2^{d-1}(P_0 + 1) - 1, i.e. 2^d (k + 1) - 1
    if (d < 63) {
        const std::uint64_t scale = std::uint64_t{1} << d;
        for (std::uint64_t x = 0; x < horizon; ++x) {
            if (!mask[x]) {
                continue;
            }
            const std::uint64_t y = scale * (x + 1) - 1;
            if (y < horizon) {
                mask[y] = true;
            }
        }
    }
    return mask;
}

PositionSet project_slot(const std::vector<bool>& p0, std::size_t j, std::uint64_t horizon) {
    PositionSet out{horizon, {}};
    if (j >= 63) {
        return out;
    }
    const std::uint64_t scale = std::uint64_t{1} << j;
    for (std::uint64_t k = 0; k < p0.size(); ++k) {
        if (!p0[k]) {
            continue;
        }
        const std::uint64_t x = scale * (k + 1) - 1;
        if (x >= horizon) {
            break;
        }
        out.indices.push_back(x);
    }
    return out;
}

std::uint64_t seed_horizon(std::size_t l, std::uint64_t horizon) {
    if (l >= 60) {
        return horizon;
    }
    return std::min<std::uint64_t>(horizon, (std::uint64_t{1} << l) * 4);
}

}  // namespace

PositionSet positions_predicted(const EpsSpec& spec, std::size_t j, std::uint64_t horizon) {
    if (!spec.letters_distinct()) {
        throw HypothesisError("positions_predicted requires pairwise distinct letters, got " +
                              spec.to_string());
    }
    const std::size_t l = spec.preperiod_length();
    const std::size_t d = spec.period_length();
    if (j >= d) {
        throw std::out_of_range("period slot index out of range");
    }
    const auto seed = positions(spec, spec.period()[0], seed_horizon(l, horizon)).indices;
    return project_slot(first_slot_mask(l, d, horizon, seed), j, horizon);
}

PositionSet slot_positions(std::size_t preperiod_length, std::size_t period_length, std::size_t j,
                           std::uint64_t horizon) {
    return positions_predicted(relabel_distinct(EpsSpec(std::string(preperiod_length, 'a'),
                                                        std::string(period_length, 'a'))),
                               j, horizon);
}

bool operator==(const KernelElement& a, const KernelElement& b) {
    return (a <=> b) == 0;
}

std::strong_ordering operator<=>(const KernelElement& a, const KernelElement& b) {
    if (a.kind != b.kind) {
        return a.kind == KernelElement::Kind::Shift ? std::strong_ordering::less
                                                    : std::strong_ordering::greater;
    }
    if (a.kind == KernelElement::Kind::Shift) {
        return a.shift <=> b.shift;
    }
    return a.constant.id <=> b.constant.id;
}

std::string to_string(const KernelElement& e) {
    if (e.kind == KernelElement::Kind::Shift) {
        return "Shift(" + std::to_string(e.shift) + ")";
    }
    return std::string("Constant(") + e.constant.name + ")";
}

std::vector<KernelElement> kernel(const EpsSpec& spec) {
    const EpsSpec reduced = spec.minimized();
    const std::size_t l = reduced.preperiod_length();
    const std::size_t d = reduced.period_length();

    auto normalize_shift = [&](std::size_t j) {
        return j < l ? j : l + (j - l) % d;
    };
    // With a minimal seed, sigma^j eps is constant exactly when d = 1 and j >= l.
    auto constant_as_shift = [&](Letter c) -> KernelElement {
        if (d == 1 && reduced.period()[0].name == c.name) {
            return KernelElement::make_shift(l);
        }
        return KernelElement::make_constant(c);
    };

    std::set<KernelElement> seen;
    std::vector<KernelElement> queue{KernelElement::make_shift(0)};
    seen.insert(queue.front());
    while (!queue.empty()) {
        const KernelElement e = queue.back();
        queue.pop_back();
        std::vector<KernelElement> children;
        if (e.kind == KernelElement::Kind::Shift) {
            children.push_back(constant_as_shift(spec.eps(e.shift)));
            children.push_back(KernelElement::make_shift(normalize_shift(e.shift + 1)));
        }
        for (const auto& child : children) {
            if (seen.insert(child).second) {
                queue.push_back(child);
            }
        }
    }
    return {seen.begin(), seen.end()};
}

}  // namespace autocf::seqcore
