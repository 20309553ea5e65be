#include "nearfact/group.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace nearfact {

namespace {

constexpr std::uint64_t kMaxOrder = std::uint64_t{1} << 31;

std::vector<std::pair<std::uint64_t, unsigned>> factorize(std::uint64_t n) {
    std::vector<std::pair<std::uint64_t, unsigned>> out;
    for (std::uint64_t p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            unsigned e = 0;
            while (n % p == 0) {
                n /= p;
                ++e;
            }
            out.emplace_back(p, e);
        }
    }
    if (n > 1) out.emplace_back(n, 1);
    return out;
}

std::uint64_t ipow(std::uint64_t b, unsigned e) {
    std::uint64_t r = 1;
    while (e--) r *= b;
    return r;
}

}  // namespace

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t p = 2; p * p <= n; ++p)
        if (n % p == 0) return false;
    return true;
}

GroupSpec::GroupSpec(std::vector<std::uint32_t> factors) : factors_(std::move(factors)) {
    if (factors_.empty()) throw std::invalid_argument("group needs at least one factor");
    for (std::uint32_t f : factors_) {
        if (f < 2) throw std::invalid_argument("group factor must be at least 2");
        if (order_ > kMaxOrder / f) throw std::invalid_argument("group order too large");
        order_ *= f;
    }
    strides_.assign(factors_.size(), 1);
    for (std::size_t i = factors_.size(); i-- > 1;)
        strides_[i - 1] = strides_[i] * factors_[i];

    std::map<std::uint64_t, unsigned> prime_use;
    for (std::uint32_t f : factors_) {
        for (auto [p, e] : factorize(f)) {
            primary_.push_back(ipow(p, e));
            prime_use[p] += 1;
        }
    }
    std::sort(primary_.begin(), primary_.end());
    cyclic_ = std::all_of(prime_use.begin(), prime_use.end(),
                          [](const auto& kv) { return kv.second <= 1; });
}

GroupSpec GroupSpec::parse(std::string_view text) {
    std::vector<std::uint32_t> factors;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t sep = text.find_first_of("xX", pos);
        if (sep == std::string_view::npos) sep = text.size();
        std::string token(text.substr(pos, sep - pos));
        std::string bad = "invalid group factor token \"" + token + "\"";
        if (token.size() < 2 || (token[0] != 'Z' && token[0] != 'z'))
            throw std::invalid_argument(bad);
        std::uint64_t value = 0;
        for (std::size_t i = 1; i < token.size(); ++i) {
            if (token[i] < '0' || token[i] > '9') throw std::invalid_argument(bad);
            value = value * 10 + static_cast<std::uint64_t>(token[i] - '0');
            if (value > kMaxOrder) throw std::invalid_argument(bad);
        }
        if (value < 2) throw std::invalid_argument(bad);
        factors.push_back(static_cast<std::uint32_t>(value));
        if (sep == text.size()) break;
        pos = sep + 1;
    }
    if (factors.empty()) throw std::invalid_argument("empty group literal");
    return GroupSpec(factors);
}

std::string GroupSpec::name() const {
    std::string out;
    for (std::size_t i = 0; i < factors_.size(); ++i) {
        if (i) out += 'x';
        out += 'Z';
        out += std::to_string(factors_[i]);
    }
    return out;
}

std::string GroupSpec::canonical_name() const {
    std::string out;
    for (std::size_t i = 0; i < primary_.size(); ++i) {
        if (i) out += 'x';
        out += 'Z';
        out += std::to_string(primary_[i]);
    }
    return out;
}

ElementIndex GroupSpec::add(ElementIndex a, ElementIndex b) const {
    if (a >= order_ || b >= order_) throw std::invalid_argument("element index out of range");
    std::uint64_t ta = a, tb = b, out = 0;
    for (std::size_t i = factors_.size(); i-- > 0;) {
        std::uint64_t f = factors_[i];
        std::uint64_t d = (ta % f + tb % f) % f;
        ta /= f;
        tb /= f;
        out += d * strides_[i];
    }
    return static_cast<ElementIndex>(out);
}

ElementIndex GroupSpec::neg(ElementIndex a) const {
    if (a >= order_) throw std::invalid_argument("element index out of range");
    std::uint64_t ta = a, out = 0;
    for (std::size_t i = factors_.size(); i-- > 0;) {
        std::uint64_t f = factors_[i];
        std::uint64_t d = ta % f;
        ta /= f;
        out += (d ? f - d : 0) * strides_[i];
    }
    return static_cast<ElementIndex>(out);
}

std::vector<std::uint32_t> GroupSpec::coords_of(ElementIndex idx) const {
    if (idx >= order_) throw std::invalid_argument("element index out of range");
    std::vector<std::uint32_t> coords(factors_.size());
    std::uint64_t t = idx;
    for (std::size_t i = factors_.size(); i-- > 0;) {
        coords[i] = static_cast<std::uint32_t>(t % factors_[i]);
        t /= factors_[i];
    }
    return coords;
}

ElementIndex GroupSpec::index_of(const std::vector<std::uint32_t>& coords) const {
    if (coords.size() != factors_.size())
        throw std::invalid_argument("element has wrong number of coordinates");
    std::uint64_t out = 0;
    for (std::size_t i = 0; i < coords.size(); ++i) {
        if (coords[i] >= factors_[i]) throw std::invalid_argument("element coordinate out of range");
        out += coords[i] * strides_[i];
    }
    return static_cast<ElementIndex>(out);
}

std::string GroupSpec::element_to_string(ElementIndex idx) const {
    auto coords = coords_of(idx);
    if (coords.size() == 1) return std::to_string(coords[0]);
    std::string out = "(";
    for (std::size_t i = 0; i < coords.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(coords[i]);
    }
    out += ')';
    return out;
}

GroupElement add(const GroupElement& g, const GroupElement& h, const GroupSpec& group) {
    return GroupElement{group.coords_of(group.add(group.index_of(g.coords), group.index_of(h.coords)))};
}

GroupElement neg(const GroupElement& g, const GroupSpec& group) {
    return GroupElement{group.coords_of(group.neg(group.index_of(g.coords)))};
}

GroupSubset::GroupSubset(GroupSpec group)
    : group_(std::move(group)), bits_((group_.order() + 63) / 64, 0) {}

GroupSubset GroupSubset::from_indices(GroupSpec group, const std::vector<ElementIndex>& idx) {
    GroupSubset s(std::move(group));
    for (ElementIndex i : idx) s.insert(i);
    return s;
}

GroupSubset GroupSubset::from_coords(GroupSpec group,
                                     const std::vector<std::vector<std::uint32_t>>& elems) {
    GroupSubset s(std::move(group));
    for (const auto& c : elems) s.insert(s.group().index_of(c));
    return s;
}

GroupSubset GroupSubset::full(GroupSpec group) {
    GroupSubset s(std::move(group));
    for (std::uint64_t i = 0; i < s.group().order(); ++i)
        s.insert(static_cast<ElementIndex>(i));
    return s;
}

bool GroupSubset::contains(ElementIndex idx) const {
    return (bits_[idx >> 6] >> (idx & 63)) & 1;
}

void GroupSubset::insert(ElementIndex idx) {
    if (idx >= group_.order()) throw std::invalid_argument("element index out of range");
    std::uint64_t& w = bits_[idx >> 6];
    std::uint64_t m = std::uint64_t{1} << (idx & 63);
    if (!(w & m)) {
        w |= m;
        ++size_;
    }
}

void GroupSubset::erase(ElementIndex idx) {
    if (idx >= group_.order()) throw std::invalid_argument("element index out of range");
    std::uint64_t& w = bits_[idx >> 6];
    std::uint64_t m = std::uint64_t{1} << (idx & 63);
    if (w & m) {
        w &= ~m;
        --size_;
    }
}

std::vector<ElementIndex> GroupSubset::indices() const {
    std::vector<ElementIndex> out;
    out.reserve(size_);
    for (std::uint64_t i = 0; i < group_.order(); ++i)
        if (contains(static_cast<ElementIndex>(i))) out.push_back(static_cast<ElementIndex>(i));
    return out;
}

std::vector<std::vector<std::uint32_t>> GroupSubset::coords() const {
    std::vector<std::vector<std::uint32_t>> out;
    out.reserve(size_);
    for (ElementIndex i : indices()) out.push_back(group_.coords_of(i));
    return out;
}

GroupSubset GroupSubset::negated() const {
    GroupSubset s(group_);
    for (ElementIndex i : indices()) s.insert(group_.neg(i));
    return s;
}

bool GroupSubset::is_symmetric() const {
    for (ElementIndex i : indices())
        if (!contains(group_.neg(i))) return false;
    return true;
}

std::string GroupSubset::to_string() const {
    std::string out = "{";
    bool first = true;
    for (ElementIndex i : indices()) {
        if (!first) out += ", ";
        out += group_.element_to_string(i);
        first = false;
    }
    out += '}';
    return out;
}

bool GroupSubset::operator==(const GroupSubset& other) const {
    return group_ == other.group_ && bits_ == other.bits_;
}

bool GroupSubset::operator<(const GroupSubset& other) const {
    if (group_.factors() != other.group_.factors()) return group_.factors() < other.group_.factors();
    return bits_ < other.bits_;
}

GroupSubset involutions(const GroupSpec& group) {
    GroupSubset out(group);
    std::vector<std::uint32_t> coords(group.rank(), 0);
    while (true) {
        out.insert(group.index_of(coords));
        std::size_t i = group.rank();
        while (i-- > 0) {
            if (coords[i] == 0 && group.factors()[i] % 2 == 0) {
                coords[i] = group.factors()[i] / 2;
                break;
            }
            coords[i] = 0;
        }
        if (i == static_cast<std::size_t>(-1)) break;
    }
    return out;
}

std::vector<std::pair<ElementIndex, ElementIndex>> symmetric_pairs(const GroupSpec& group) {
    std::vector<std::pair<ElementIndex, ElementIndex>> out;
    for (std::uint64_t i = 1; i < group.order(); ++i) {
        ElementIndex x = static_cast<ElementIndex>(i);
        ElementIndex y = group.neg(x);
        if (x < y) out.emplace_back(x, y);
    }
    return out;
}

std::uint64_t quotient_order_exponent_d(const GroupSpec& group, unsigned d) {
    if (d != 2 && d != 3 && d != 4 && d != 6)
        throw std::invalid_argument("exponent d must be one of 2, 3, 4, 6");
    std::uint64_t h = 1;
    for (std::uint32_t f : group.factors()) h *= std::gcd<std::uint64_t>(f, d);
    return h;
}

unsigned elementary_p_quotient_rank(const GroupSpec& group, std::uint64_t p) {
    if (!is_prime(p)) throw std::invalid_argument("p must be prime");
    unsigned m = 0;
    for (std::uint32_t f : group.factors())
        if (f % p == 0) ++m;
    return m;
}

}  // namespace nearfact
