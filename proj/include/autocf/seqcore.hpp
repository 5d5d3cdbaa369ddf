#pragma once

// The words W_n (W_0 empty, W_{n+1} = W_n e_n W_n), the limit sequence s(eps) they
// define, letter position sets and the 2-kernel of s(eps).

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace autocf::seqcore {

struct Letter {
    int id = 0;
    char name = 'a';

    friend bool operator==(const Letter&, const Letter&) = default;
};

using Word = std::vector<Letter>;

std::string to_string(const Word& word);

// Ultimately periodic seed p_0..p_{l-1} (e_0..e_{d-1})^inf. Letter ids are assigned in
// order of first appearance, preperiod first.
class EpsSpec {
public:
    EpsSpec(std::string_view preperiod, std::string_view period);

    // Text form PRE(PER), letters in [a-y], e.g. "a(bc)", "(aabb)".
    static EpsSpec parse(std::string_view text);

    std::size_t preperiod_length() const { return preperiod_.size(); }
    std::size_t period_length() const { return period_.size(); }
    const std::vector<Letter>& preperiod() const { return preperiod_; }
    const std::vector<Letter>& period() const { return period_; }
    // Distinct letters indexed by id.
    const std::vector<Letter>& alphabet() const { return alphabet_; }

    // eps_index, reading through the preperiod and then cyclically through the period.
    Letter eps(std::uint64_t index) const;
    // Letter by name; throws std::invalid_argument if absent.
    Letter letter(char name) const;
    // True when no letter repeats anywhere in preperiod + period.
    bool letters_distinct() const;

    // The seed sigma^j eps, as a spec over the same letter names.
    EpsSpec shifted(std::size_t j) const;
    // Same infinite sequence with the shortest period and then the shortest preperiod.
    EpsSpec minimized() const;

    std::string to_string() const;

    friend bool operator==(const EpsSpec& a, const EpsSpec& b) {
        return a.to_string() == b.to_string();
    }

private:
    std::vector<Letter> preperiod_;
    std::vector<Letter> period_;
    std::vector<Letter> alphabet_;
};

// Relabels every slot of the seed with a fresh letter ('a', 'b', ... in slot order).
// Requires l + d <= 25.
EpsSpec relabel_distinct(const EpsSpec& spec);

// Largest n accepted by build_word.
inline constexpr int kMaxWordOrder = 26;

// s_n = eps_{v2(n+1)}.
Letter letter_at(const EpsSpec& spec, std::uint64_t n);
Word build_word(const EpsSpec& spec, int n);
Word stream_prefix(const EpsSpec& spec, std::size_t length);

struct PositionSet {
    std::uint64_t horizon = 0;
    std::vector<std::uint64_t> indices;

    friend bool operator==(const PositionSet&, const PositionSet&) = default;
};

// Indices k < horizon with s_k = c, by enumeration.
PositionSet positions(const EpsSpec& spec, Letter c, std::uint64_t horizon);

// Positions of e_j obtained from the recursions P_{j+1} = 2 P_j + 1 and
// P_0 = (2 P_{d-1} + 1) u {(2k+1) 2^l - 1}, with P_0 seeded by enumeration below
// 2^l * 4. Requires pairwise distinct letters (HypothesisError otherwise).
PositionSet positions_predicted(const EpsSpec& spec, std::size_t j, std::uint64_t horizon);

// Same recursion without the distinctness check: positions of the j-th period slot,
// i.e. indices k with v2(k+1) >= l and (v2(k+1) - l) mod d == j.
PositionSet slot_positions(std::size_t preperiod_length, std::size_t period_length, std::size_t j,
                           std::uint64_t horizon);

struct KernelElement {
    enum class Kind { Shift, Constant };

    Kind kind = Kind::Shift;
    std::size_t shift = 0;   // Shift: the sequence s(sigma^shift eps)
    Letter constant{};       // Constant: the constant sequence

    static KernelElement make_shift(std::size_t j) { return {Kind::Shift, j, {}}; }
    static KernelElement make_constant(Letter c) { return {Kind::Constant, 0, c}; }

    friend bool operator==(const KernelElement& a, const KernelElement& b);
    friend std::strong_ordering operator<=>(const KernelElement& a, const KernelElement& b);
};

std::string to_string(const KernelElement& e);

// Exact 2-kernel: closure of Shift(0) under s(2n) -> Constant(eps_0), s(2n+1) -> Shift(+1),
// with shifts reduced modulo the (minimal) period and constant shifts written as shifts.
std::vector<KernelElement> kernel(const EpsSpec& spec);

}  // namespace autocf::seqcore
