#include "nearfact/coset.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>
#include <stdexcept>

#include "nearfact/combinatorics.hpp"

namespace nearfact {

namespace {

struct CosetShape {
    std::size_t odd_position = 0;   // factor index of Z_t
    std::size_t even_i = 0;         // factor index of the first Z_2 (cell bit i)
    std::size_t even_j = 0;         // second Z_2 (cell bit j)
    std::uint32_t t = 0;
};

CosetShape coset_shape(const GroupSpec& group) {
    CosetShape shape;
    std::vector<std::size_t> twos;
    std::vector<std::size_t> odds;
    for (std::size_t k = 0; k < group.rank(); ++k) {
        if (group.factors()[k] == 2)
            twos.push_back(k);
        else if (group.factors()[k] % 2 == 1)
            odds.push_back(k);
    }
    if (group.rank() != 3 || twos.size() != 2 || odds.size() != 1)
        throw std::invalid_argument("coset strategy needs a group of the shape Z_t x Z_2 x Z_2 with t odd");
    shape.odd_position = odds[0];
    shape.even_i = twos[0];
    shape.even_j = twos[1];
    shape.t = group.factors()[shape.odd_position];
    return shape;
}

// elements of one Z_t coset: label 0 is the involution (0,i,j), label x in
// [1, (t-1)/2] is the pair {(x,i,j), (t-x,i,j)}
ElementIndex cell_element(const GroupSpec& group, const CosetShape& shape, unsigned cell, std::uint32_t value) {
    std::vector<std::uint32_t> coords(3, 0);
    coords[shape.odd_position] = value;
    coords[shape.even_i] = (cell >> 1) & 1;
    coords[shape.even_j] = cell & 1;
    return group.index_of(coords);
}

// labels minimal in their orbit under multiplication by units of Z_t, where
// label x stands for the pair {x, t-x}
std::vector<std::uint32_t> unit_orbit_minima(std::uint32_t t) {
    const std::uint32_t half = (t - 1) / 2;
    std::vector<std::uint32_t> reps;
    for (std::uint32_t x = 1; x <= half; ++x) {
        bool minimal = true;
        for (std::uint32_t u = 1; u < t && minimal; ++u) {
            if (std::gcd(u, t) != 1) continue;
            std::uint32_t y = static_cast<std::uint32_t>((std::uint64_t{u} * x) % t);
            if (y > half) y = t - y;
            if (y < x) minimal = false;
        }
        if (minimal) reps.push_back(x);
    }
    return reps;
}

}  // namespace

bool coset_search_applicable(const GroupSpec& group, std::uint32_t r, std::uint32_t s,
                             std::uint32_t lambda) {
    if (lambda != 1 || r < 2 || s < 2) return false;
    if (std::uint64_t{r} * s != std::uint64_t{group.order()} - 1) return false;
    try {
        coset_shape(group);
    } catch (const std::invalid_argument&) {
        return false;
    }
    return true;
}

std::vector<CosetDistribution> admissible_coset_distributions(const GroupSpec& group, std::uint32_t r,
                                                              std::uint32_t s) {
    const CosetShape shape = coset_shape(group);
    const std::uint32_t t = shape.t;
    if (r < 2 || s < 2) throw std::invalid_argument("r and s must be at least 2");
    if (std::uint64_t{r} * s != std::uint64_t{group.order()} - 1)
        throw std::invalid_argument("r*s must equal n-1");

    const std::uint32_t ra = r % 4 == 1 ? r : s;
    const std::uint32_t sb = r % 4 == 1 ? s : r;

    std::vector<CosetDistribution> out;
    std::array<std::uint32_t, 4> a{}, b{};
    for (a[0] = 0; a[0] <= ra; ++a[0])
        for (a[1] = 0; a[0] + a[1] <= ra; ++a[1])
            for (a[2] = 0; a[0] + a[1] + a[2] <= ra; ++a[2]) {
                a[3] = ra - a[0] - a[1] - a[2];
                for (b[0] = 0; b[0] <= sb; ++b[0])
                    for (b[1] = 0; b[0] + b[1] <= sb; ++b[1])
                        for (b[2] = 0; b[0] + b[1] + b[2] <= sb; ++b[2]) {
                            b[3] = sb - b[0] - b[1] - b[2];
                            bool ok = true;
                            for (unsigned d = 0; d < 4 && ok; ++d) {
                                std::uint64_t sum = 0;
                                for (unsigned c = 0; c < 4; ++c) sum += std::uint64_t{a[c]} * b[c ^ d];
                                ok = sum == (d == 0 ? std::uint64_t{t} - 1 : std::uint64_t{t});
                            }
                            if (!ok) continue;
                            CosetDistribution dist;
                            dist.a = a;
                            dist.b = b;
                            dist.exceptional_cell = static_cast<unsigned>(
                                std::max_element(a.begin(), a.end()) - a.begin());
                            out.push_back(dist);
                        }
            }
    std::sort(out.begin(), out.end(), [](const CosetDistribution& x, const CosetDistribution& y) {
        return x.exceptional_cell < y.exceptional_cell;
    });
    return out;
}

SearchReport coset_structured_search(const SearchTask& task) {
    using clock = std::chrono::steady_clock;
    const auto t0 = clock::now();
    const GroupSpec& g = task.group;
    const CosetShape shape = coset_shape(g);

    if (task.lambda != 1) throw std::invalid_argument("coset strategy covers lambda = 1 only");
    if (task.r < 2 || task.s < 2) throw std::invalid_argument("r and s must be at least 2");
    if (std::uint64_t{task.r} * task.s != std::uint64_t{g.order()} - 1)
        throw std::invalid_argument("r*s must equal n-1");

    SearchReport report;
    report.task = task;
    report.filter_verdicts = evaluate_all(g, task.r, task.s, task.lambda);
    for (const auto& verdict : report.filter_verdicts)
        if (verdict.ruled_out()) {
            report.exhaustive = true;
            report.wall_seconds = std::chrono::duration<double>(clock::now() - t0).count();
            return report;
        }

    // one representative per orbit of GL(2,2) on the exceptional cell: the
    // identity cell (0,0), and any one nonzero cell
    std::vector<CosetDistribution> cases;
    for (const auto& dist : admissible_coset_distributions(g, task.r, task.s))
        if (dist.exceptional_cell <= 1) cases.push_back(dist);

    const std::uint32_t m = std::min(task.r, task.s);
    const bool enumerated_is_a = task.r <= task.s;
    const std::uint32_t half = (shape.t - 1) / 2;
    const std::vector<std::uint32_t> first_cell_minima = unit_orbit_minima(shape.t);

    std::optional<clock::time_point> deadline;
    if (task.budget_seconds > 0)
        deadline = t0 + std::chrono::duration_cast<clock::duration>(std::chrono::duration<double>(task.budget_seconds));

    std::uint64_t resume_case = 0, resume_rank = 0;
    if (task.resume) {
        resume_case = task.resume->profile_index;
        resume_rank = task.resume->pair_rank;
        if (resume_case > cases.size()) throw std::out_of_range("cursor outside the enumeration");
    }

    bool stopped = false;
    for (std::size_t case_idx = resume_case; case_idx < cases.size() && !stopped; ++case_idx) {
        const CosetDistribution& dist = cases[case_idx];
        std::array<std::uint32_t, 4> counts{};
        for (unsigned c = 0; c < 4; ++c) counts[c] = m % 4 == 1 ? dist.a[c] : dist.b[c];

        // per-cell pair label choices; the first pair-carrying cell is
        // normalised to start at a unit-orbit-minimal label
        int first_pair_cell = -1;
        for (unsigned c = 0; c < 4; ++c)
            if (counts[c] / 2 > 0) {
                first_pair_cell = static_cast<int>(c);
                break;
            }
        std::array<std::vector<std::vector<std::uint32_t>>, 4> cell_choices;
        for (unsigned c = 0; c < 4; ++c) {
            const std::uint32_t need = counts[c] / 2;
            if (need == 0) {
                cell_choices[c].push_back({});
                continue;
            }
            if (need > half) break;  // no labels to draw from; cell_choices[c] stays empty
            std::vector<std::uint32_t> combo = combination_unrank(0, half, need);
            do {
                std::vector<std::uint32_t> labels;
                for (std::uint32_t pos : combo) labels.push_back(pos + 1);
                if (static_cast<int>(c) == first_pair_cell &&
                    !std::binary_search(first_cell_minima.begin(), first_cell_minima.end(), labels.front()))
                    continue;
                cell_choices[c].push_back(std::move(labels));
            } while (next_combination(combo, half));
        }

        std::uint64_t case_total = 1;
        for (unsigned c = 0; c < 4; ++c) case_total *= cell_choices[c].size();

        for (std::uint64_t rank = case_idx == resume_case ? resume_rank : 0; rank < case_total; ++rank) {
            if (search_stop_requested() || (deadline && clock::now() >= *deadline)) {
                report.checkpoint = EnumerationCursor{case_idx, 0, rank};
                stopped = true;
                break;
            }
            // mixed-radix decode, last cell fastest
            std::uint64_t rem = rank;
            std::array<std::size_t, 4> pick{};
            for (unsigned c = 4; c-- > 0;) {
                pick[c] = rem % cell_choices[c].size();
                rem /= cell_choices[c].size();
            }
            std::vector<ElementIndex> elems;
            for (unsigned c = 0; c < 4; ++c) {
                if (counts[c] % 2 == 1) elems.push_back(cell_element(g, shape, c, 0));
                for (std::uint32_t label : cell_choices[c][pick[c]]) {
                    elems.push_back(cell_element(g, shape, c, label));
                    elems.push_back(cell_element(g, shape, c, shape.t - label));
                }
            }
            GroupSubset candidate = GroupSubset::from_indices(g, elems);
            ++report.candidates_tested;
            MateResult res = compute_mate_sparse(g, candidate, task.lambda);
            if (res.found()) {
                if (enumerated_is_a)
                    report.found.push_back({g, candidate, *res.mate, task.lambda});
                else
                    report.found.push_back({g, *res.mate, candidate, task.lambda});
            }
        }
    }

    report.exhaustive = !stopped;
    report.wall_seconds = std::chrono::duration<double>(clock::now() - t0).count();
    return report;
}

}  // namespace nearfact
