#include "nearfact/search.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <mutex>
#include <stdexcept>
#include <string>
#include <thread>

#include "nearfact/combinatorics.hpp"
#include "nearfact/coset.hpp"

namespace nearfact {

namespace {
std::atomic<bool> g_stop_flag{false};

std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b) {
    if (a != 0 && b > UINT64_MAX / a) return UINT64_MAX;
    return a * b;
}

std::uint64_t saturating_add(std::uint64_t a, std::uint64_t b) {
    return a > UINT64_MAX - b ? UINT64_MAX : a + b;
}
}  // namespace

void request_search_stop() { g_stop_flag.store(true); }
void clear_search_stop() { g_stop_flag.store(false); }
bool search_stop_requested() { return g_stop_flag.load(); }

const char* to_string(SearchStrategy strategy) {
    switch (strategy) {
        case SearchStrategy::Plain: return "plain";
        case SearchStrategy::OrbitReduced: return "orbit-reduced";
        case SearchStrategy::Coset2x2: return "coset-2x2";
    }
    return "?";
}

SearchStrategy search_strategy_from_string(std::string_view name) {
    if (name == "plain") return SearchStrategy::Plain;
    if (name == "orbit-reduced" || name == "orbit") return SearchStrategy::OrbitReduced;
    if (name == "coset-2x2" || name == "coset") return SearchStrategy::Coset2x2;
    throw std::invalid_argument("unknown search strategy \"" + std::string(name) + "\"");
}

std::vector<InvolutionProfile> feasible_profiles(const GroupSpec& group, std::uint32_t size) {
    const auto t1 = static_cast<std::uint32_t>(involutions(group).size());
    const auto t2 = static_cast<std::uint32_t>(symmetric_pairs(group).size());
    std::vector<InvolutionProfile> profiles;
    for (std::uint32_t i1 = size % 2; i1 <= size && i1 <= t1; i1 += 2) {
        std::uint32_t i2 = (size - i1) / 2;
        if (i2 <= t2) profiles.push_back({i1, i2});
    }
    return profiles;
}

SymmetricSubsetStream::SymmetricSubsetStream(const GroupSpec& group, InvolutionProfile profile,
                                             std::optional<CatalogBinding> binding)
    : group_(group), profile_(profile), binding_(std::move(binding)) {
    involution_list_ = involutions(group_).indices();
    pair_list_ = symmetric_pairs(group_);
    if (binding_) {
        if (binding_->catalog.subset_size != profile_.involutions)
            throw std::invalid_argument("catalog subset size does not match the profile");
        if (binding_->universe_to_involution.size() != involution_list_.size())
            throw std::invalid_argument("catalog universe does not cover the involutions");
    }
    if (involution_choices() == 0 || pair_choices() == 0) {
        done_ = true;
        return;
    }
    load_involution_choice();
    pair_combo_ = combination_unrank(0, static_cast<std::uint32_t>(pair_list_.size()), profile_.pairs);
}

std::uint64_t SymmetricSubsetStream::involution_choices() const {
    if (binding_) return binding_->catalog.representatives.size();
    return binomial(static_cast<std::uint32_t>(involution_list_.size()), profile_.involutions);
}

std::uint64_t SymmetricSubsetStream::pair_choices() const {
    return binomial(static_cast<std::uint32_t>(pair_list_.size()), profile_.pairs);
}

void SymmetricSubsetStream::load_involution_choice() {
    if (binding_) return;  // representatives are indexed directly by rank
    involution_combo_ = combination_unrank(involution_rank_, static_cast<std::uint32_t>(involution_list_.size()),
                                           profile_.involutions);
}

GroupSubset SymmetricSubsetStream::current() const {
    std::vector<ElementIndex> elems;
    elems.reserve(profile_.involutions + 2 * profile_.pairs);
    if (binding_) {
        const auto& universe = binding_->catalog.involution_elements;
        for (std::uint32_t part_elem : binding_->catalog.representatives[involution_rank_]) {
            auto it = std::lower_bound(universe.begin(), universe.end(), part_elem);
            std::uint32_t pos = binding_->universe_to_involution[it - universe.begin()];
            elems.push_back(involution_list_[pos]);
        }
    } else {
        for (std::uint32_t pos : involution_combo_) elems.push_back(involution_list_[pos]);
    }
    for (std::uint32_t pos : pair_combo_) {
        elems.push_back(pair_list_[pos].first);
        elems.push_back(pair_list_[pos].second);
    }
    return GroupSubset::from_indices(group_, elems);
}

std::optional<GroupSubset> SymmetricSubsetStream::next() {
    if (done_) return std::nullopt;
    GroupSubset result = current();
    bool wrapped = profile_.pairs == 0 ||
                   !next_combination(pair_combo_, static_cast<std::uint32_t>(pair_list_.size()));
    if (wrapped) {
        pair_rank_ = 0;
        ++involution_rank_;
        if (involution_rank_ >= involution_choices())
            done_ = true;
        else
            load_involution_choice();
    } else {
        ++pair_rank_;
    }
    return result;
}

void SymmetricSubsetStream::seek(std::uint64_t involution_rank, std::uint64_t pair_rank) {
    if (involution_rank >= involution_choices() || pair_rank >= pair_choices())
        throw std::out_of_range("cursor outside the enumeration");
    involution_rank_ = involution_rank;
    pair_rank_ = pair_rank;
    done_ = false;
    load_involution_choice();
    pair_combo_ = combination_unrank(pair_rank_, static_cast<std::uint32_t>(pair_list_.size()), profile_.pairs);
}

namespace {

class SymmetricCandidateStream final : public CandidateStream {
  public:
    SymmetricCandidateStream(const GroupSpec& group, std::uint32_t size, bool orbit_reduced)
        : group_(group), profiles_(feasible_profiles(group, size)) {
        bindings_.resize(profiles_.size());
        if (orbit_reduced)
            for (std::size_t i = 0; i < profiles_.size(); ++i)
                bindings_[i] = catalog_for(group, profiles_[i].involutions);
    }

    std::optional<GroupSubset> next() override {
        while (index_ < profiles_.size()) {
            if (!sub_) sub_ = std::make_unique<SymmetricSubsetStream>(group_, profiles_[index_], bindings_[index_]);
            if (auto c = sub_->next()) return c;
            sub_.reset();
            ++index_;
        }
        return std::nullopt;
    }

    EnumerationCursor cursor() const override {
        if (index_ >= profiles_.size()) return {profiles_.size(), 0, 0};
        if (!sub_) return {index_, 0, 0};
        // a sub-stream that just yielded its last candidate parks on the
        // start of the next profile
        if (sub_->exhausted()) return {index_ + 1, 0, 0};
        return {index_, sub_->involution_rank(), sub_->pair_rank()};
    }

    void seek(const EnumerationCursor& cursor) override {
        if (cursor.profile_index > profiles_.size() ||
            (cursor.profile_index == profiles_.size() && (cursor.involution_rank || cursor.pair_rank)))
            throw std::out_of_range("cursor outside the enumeration");
        index_ = cursor.profile_index;
        sub_.reset();
        if (index_ < profiles_.size()) {
            sub_ = std::make_unique<SymmetricSubsetStream>(group_, profiles_[index_], bindings_[index_]);
            sub_->seek(cursor.involution_rank, cursor.pair_rank);
        }
    }

    std::uint64_t size_hint() const override {
        std::uint64_t total = 0;
        for (std::size_t i = 0; i < profiles_.size(); ++i) {
            SymmetricSubsetStream probe(group_, profiles_[i], bindings_[i]);
            total = saturating_add(total, saturating_mul(probe.involution_choices(), probe.pair_choices()));
        }
        return total;
    }

  private:
    GroupSpec group_;
    std::vector<InvolutionProfile> profiles_;
    std::vector<std::optional<CatalogBinding>> bindings_;
    std::size_t index_ = 0;
    std::unique_ptr<SymmetricSubsetStream> sub_;
};

class PlainSubsetStream final : public CandidateStream {
  public:
    PlainSubsetStream(const GroupSpec& group, std::uint32_t size)
        : group_(group), n_(static_cast<std::uint32_t>(group.order())), size_(size) {
        total_ = binomial(n_, size);
        if (total_ == 0)
            done_ = true;
        else
            combo_ = combination_unrank(0, n_, size_);
    }

    std::optional<GroupSubset> next() override {
        if (done_) return std::nullopt;
        std::vector<ElementIndex> elems(combo_.begin(), combo_.end());
        GroupSubset result = GroupSubset::from_indices(group_, elems);
        if (!next_combination(combo_, n_))
            done_ = true;
        else
            ++rank_;
        return result;
    }

    EnumerationCursor cursor() const override { return {0, 0, done_ ? total_ : rank_}; }

    void seek(const EnumerationCursor& cursor) override {
        if (cursor.profile_index != 0 || cursor.involution_rank != 0 || cursor.pair_rank > total_)
            throw std::out_of_range("cursor outside the enumeration");
        rank_ = cursor.pair_rank;
        done_ = rank_ == total_;
        if (!done_) combo_ = combination_unrank(rank_, n_, size_);
    }

    std::uint64_t size_hint() const override { return total_; }

  private:
    GroupSpec group_;
    std::uint32_t n_;
    std::uint32_t size_;
    std::vector<std::uint32_t> combo_;
    std::uint64_t rank_ = 0;
    std::uint64_t total_ = 0;
    bool done_ = false;
};

}  // namespace

std::unique_ptr<CandidateStream> make_candidate_stream(const GroupSpec& group, std::uint32_t subset_size,
                                                       bool symmetric, bool orbit_reduced) {
    if (symmetric) return std::make_unique<SymmetricCandidateStream>(group, subset_size, orbit_reduced);
    return std::make_unique<PlainSubsetStream>(group, subset_size);
}

SearchReport search(const SearchTask& task) {
    using clock = std::chrono::steady_clock;
    const auto t0 = clock::now();
    const GroupSpec& g = task.group;

    if (task.lambda < 1) throw std::invalid_argument("lambda must be at least 1");
    if (task.r < 1 || task.s < 1 || task.r > g.order() || task.s > g.order())
        throw std::invalid_argument("r and s must lie in [1, n]");
    if (std::uint64_t{task.r} * task.s != std::uint64_t{task.lambda} * (g.order() - 1))
        throw std::invalid_argument("r*s must equal lambda*(n-1)");
    if (task.strategy == SearchStrategy::Coset2x2) return coset_structured_search(task);

    SearchReport report;
    report.task = task;
    report.filter_verdicts = evaluate_all(g, task.r, task.s, task.lambda);
    for (const auto& verdict : report.filter_verdicts)
        if (verdict.ruled_out()) {
            report.exhaustive = true;
            report.wall_seconds = std::chrono::duration<double>(clock::now() - t0).count();
            return report;
        }

    const std::uint32_t m = std::min(task.r, task.s);
    const bool enumerated_is_a = task.r <= task.s;
    auto stream = make_candidate_stream(g, m, task.symmetric_enumeration(),
                                        task.strategy == SearchStrategy::OrbitReduced);
    if (task.resume) stream->seek(*task.resume);

    std::optional<clock::time_point> deadline;
    if (task.budget_seconds > 0)
        deadline = t0 + std::chrono::duration_cast<clock::duration>(std::chrono::duration<double>(task.budget_seconds));

    constexpr std::size_t kChunk = 16;
    std::mutex stream_mutex;
    std::mutex result_mutex;
    bool interrupted = false;
    EnumerationCursor frontier;
    std::uint64_t next_seq = 0;
    std::vector<std::vector<NearFactorization>> chunk_found;
    std::atomic<std::uint64_t> tested{0};
    std::exception_ptr first_error;

    auto worker = [&]() {
        std::vector<GroupSubset> batch;
        for (;;) {
            batch.clear();
            std::uint64_t seq = 0;
            {
                std::lock_guard<std::mutex> lock(stream_mutex);
                if (interrupted) return;
                if (search_stop_requested() || (deadline && clock::now() >= *deadline)) {
                    interrupted = true;
                    frontier = stream->cursor();
                    return;
                }
                seq = next_seq;
                while (batch.size() < kChunk) {
                    auto candidate = stream->next();
                    if (!candidate) break;
                    batch.push_back(std::move(*candidate));
                }
                if (batch.empty()) return;  // exhausted
                ++next_seq;
            }
            std::vector<NearFactorization> found_here;
            try {
                for (const auto& candidate : batch) {
                    MateResult res = compute_mate_sparse(g, candidate, task.lambda);
                    if (res.found()) {
                        if (enumerated_is_a)
                            found_here.push_back({g, candidate, *res.mate, task.lambda});
                        else
                            found_here.push_back({g, *res.mate, candidate, task.lambda});
                    }
                }
            } catch (...) {
                {
                    std::lock_guard<std::mutex> lock(stream_mutex);
                    interrupted = true;
                    frontier = stream->cursor();
                }
                std::lock_guard<std::mutex> lock(result_mutex);
                if (!first_error) first_error = std::current_exception();
                return;
            }
            tested += batch.size();
            std::lock_guard<std::mutex> lock(result_mutex);
            if (chunk_found.size() <= seq) chunk_found.resize(seq + 1);
            chunk_found[seq] = std::move(found_here);
        }
    };

    const unsigned workers = std::max(1u, task.workers);
    if (workers == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (unsigned i = 0; i < workers; ++i) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }
    if (first_error) std::rethrow_exception(first_error);

    report.candidates_tested = tested.load();
    for (auto& chunk : chunk_found)
        for (auto& nf : chunk) report.found.push_back(std::move(nf));
    report.exhaustive = !interrupted;
    if (interrupted) report.checkpoint = frontier;
    report.wall_seconds = std::chrono::duration<double>(clock::now() - t0).count();
    return report;
}

}  // namespace nearfact
