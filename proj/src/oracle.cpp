#include "clustercap/oracle.hpp"

#include <stdexcept>
#include <utility>

#include "clustercap/errors.hpp"

namespace clustercap {

namespace {

void internal_check(bool ok, const char* what) {
    if (!ok) {
        throw std::logic_error(std::string("internal invariant violated: ") + what);
    }
}

// Minimizes the sum of per-position terms over all admissible orderings of a
// fixed selection vector.  table[e * k + (i-1)] holds min{alpha, omega(e, i)}
// where e is the number of earlier picks from the same cluster; every entry
// reachable from a valid state is nonnegative, which makes pruning on the
// partial sum sound.
template <typename V>
class MinEngine {
  public:
    MinEngine(int k, const std::vector<V>& table, std::vector<int> counts)
        : k_(k),
          L_(static_cast<int>(counts.size())),
          table_(table),
          initial_(counts),
          remaining_(std::move(counts)) {}

    void run() {
        current_.reserve(static_cast<size_t>(k_));
        rec(1, V(0));
        internal_check(have_best_, "ordering enumeration must visit at least one ordering");
    }

    const V& best() const { return best_; }
    const std::vector<int>& witness() const { return witness_; }

  private:
    void rec(int i, V partial) {
        if (have_best_ && partial >= best_) {
            return;  // remaining terms are all >= 0; no improvement possible
        }
        if (i > k_) {
            best_ = partial;
            have_best_ = true;
            witness_ = current_;
            return;
        }
        for (int l = 0; l < L_; ++l) {
            if (remaining_[l] == 0) {
                continue;
            }
            // Clusters with identical (initial, remaining) counts are
            // interchangeable, so exploring one representative preserves the
            // exact minimum.
            bool duplicate = false;
            for (int m = 0; m < l; ++m) {
                if (initial_[m] == initial_[l] && remaining_[m] == remaining_[l]) {
                    duplicate = true;
                    break;
                }
            }
            if (duplicate) {
                continue;
            }
            const int e = initial_[l] - remaining_[l];
            --remaining_[l];
            current_.push_back(l + 1);
            rec(i + 1, partial + table_[static_cast<size_t>(e) * k_ + (i - 1)]);
            current_.pop_back();
            ++remaining_[l];
        }
    }

    int k_;
    int L_;
    const std::vector<V>& table_;
    std::vector<int> initial_;
    std::vector<int> remaining_;
    std::vector<int> current_;
    std::vector<int> witness_;
    V best_{};
    bool have_best_ = false;
};

// Term table for the maximal-helper cut bound:
// omega(e, i) = (n_I-1-e) beta_I + (n - i - (n_I-1-e)) beta_c.
std::vector<Rat> standard_table(const SystemParams& p, const ResourcePoint& r) {
    std::vector<Rat> table(static_cast<size_t>(p.n_I) * p.k, Rat(0));
    for (int e = 0; e < p.n_I; ++e) {
        for (int i = e + 1; i <= p.k; ++i) {  // valid states have e <= i-1
            const int a = p.n_I - 1 - e;
            Rat omega = Rat(a) * r.beta_I + Rat(p.n - i - a) * r.beta_c;
            table[static_cast<size_t>(e) * p.k + (i - 1)] = omega < r.alpha ? omega : r.alpha;
        }
    }
    return table;
}

// Term table for d_I intra-cluster / d_c cross-cluster helpers with fixed
// bandwidth totals: omega(e, i) = gamma - min{d_I, e} b_I' - min{d_c, i-1-e} b_c'.
std::vector<Rat> general_table(const SystemParams& p, int d_I, int d_c, const Rat& alpha,
                               const Rat& gamma, const Rat& beta_I, const Rat& beta_c) {
    std::vector<Rat> table(static_cast<size_t>(p.n_I) * p.k, Rat(0));
    for (int e = 0; e < p.n_I; ++e) {
        for (int i = e + 1; i <= p.k; ++i) {
            Rat omega = gamma - Rat(std::min(d_I, e)) * beta_I -
                        Rat(std::min(d_c, i - 1 - e)) * beta_c;
            table[static_cast<size_t>(e) * p.k + (i - 1)] = omega < alpha ? omega : alpha;
        }
    }
    return table;
}

struct MinOutcome {
    Rat value;
    std::vector<int> ordering;
};

// Runs the engine on a scaled int64 table when the magnitudes allow it,
// falling back to exact rationals otherwise.
class OrderingMinimizer {
  public:
    OrderingMinimizer(int k, const std::vector<Rat>& table) : k_(k), rat_table_(table) {
        Int scale = 1;
        for (const Rat& v : rat_table_) {
            scale = boost::multiprecision::lcm(scale, den(v));
        }
        Int max_scaled = 0;
        std::vector<Int> scaled;
        scaled.reserve(rat_table_.size());
        for (const Rat& v : rat_table_) {
            Int s = num(v) * (scale / den(v));
            if (s > max_scaled) {
                max_scaled = s;
            }
            scaled.push_back(std::move(s));
        }
        // Partial sums stay within [0, k * max_entry]; keep headroom below 2^62.
        if (max_scaled * (k_ + 1) < (Int(1) << 62)) {
            scale_ = scale;
            int_table_.reserve(scaled.size());
            for (const Int& s : scaled) {
                int_table_.push_back(s.convert_to<long long>());
            }
        }
    }

    MinOutcome minimize(const std::vector<int>& counts) const {
        if (!int_table_.empty()) {
            MinEngine<long long> engine(k_, int_table_, counts);
            engine.run();
            return {Rat(Int(engine.best()), scale_), engine.witness()};
        }
        MinEngine<Rat> engine(k_, rat_table_, counts);
        engine.run();
        return {engine.best(), engine.witness()};
    }

  private:
    int k_;
    const std::vector<Rat>& rat_table_;
    std::vector<long long> int_table_;
    Int scale_ = 1;
};

void check_cap(const SelectionVector& s, long long cap) {
    if (ordering_count(s) > cap) {
        throw EnumerationTooLargeError("ordering enumeration exceeds cap for selection vector");
    }
}

}  // namespace

SelectionVector make_selection(const SystemParams& p, std::vector<int> values) {
    if (static_cast<int>(values.size()) != p.L) {
        throw std::invalid_argument("selection vector must have exactly L entries");
    }
    int sum = 0;
    for (size_t i = 0; i < values.size(); ++i) {
        if (values[i] < 0 || values[i] > p.n_I) {
            throw std::invalid_argument("selection entries must lie in [0, n_I]");
        }
        if (i > 0 && values[i] > values[i - 1]) {
            throw std::invalid_argument("selection vector must be nonincreasing");
        }
        sum += values[i];
    }
    if (sum != p.k) {
        throw std::invalid_argument("selection entries must sum to k");
    }
    return SelectionVector{std::move(values)};
}

std::vector<SelectionVector> enumerate_selection_vectors(const SystemParams& p) {
    std::vector<SelectionVector> out;
    std::vector<int> cur(static_cast<size_t>(p.L), 0);
    // Depth-first over nonincreasing entries; bound each prefix by what the
    // remaining positions can still absorb.
    auto rec = [&](auto&& self, int pos, int prev, int remaining) -> void {
        if (pos == p.L) {
            if (remaining == 0) {
                out.push_back(SelectionVector{cur});
            }
            return;
        }
        const int slots_left = p.L - pos - 1;
        for (int v = std::min(prev, remaining); v >= 0; --v) {
            if (remaining - v > slots_left * v) {
                break;  // later entries are <= v and cannot cover the rest
            }
            cur[static_cast<size_t>(pos)] = v;
            self(self, pos + 1, v, remaining - v);
        }
        cur[static_cast<size_t>(pos)] = 0;
    };
    rec(rec, 0, p.n_I, p.k);
    return out;
}

Int ordering_count(const SelectionVector& s) {
    int k = 0;
    for (int v : s.s) {
        k += v;
    }
    Int count = 1;
    for (int i = 2; i <= k; ++i) {
        count *= i;
    }
    for (int v : s.s) {
        for (int i = 2; i <= v; ++i) {
            count /= i;
        }
    }
    return count;
}

void for_each_ordering(const SelectionVector& s,
                       const std::function<void(const OrderingVector&)>& visit, long long cap) {
    check_cap(s, cap);
    int k = 0;
    for (int v : s.s) {
        k += v;
    }
    const int L = static_cast<int>(s.s.size());
    std::vector<int> remaining = s.s;
    OrderingVector pi;
    pi.pi.reserve(static_cast<size_t>(k));
    auto rec = [&](auto&& self, int i) -> void {
        if (i > k) {
            visit(pi);
            return;
        }
        for (int l = 0; l < L; ++l) {
            if (remaining[static_cast<size_t>(l)] == 0) {
                continue;
            }
            --remaining[static_cast<size_t>(l)];
            pi.pi.push_back(l + 1);
            self(self, i + 1);
            pi.pi.pop_back();
            ++remaining[static_cast<size_t>(l)];
        }
    };
    rec(rec, 1);
}

OrderingVector vertical_ordering(const SelectionVector& s) {
    const int L = static_cast<int>(s.s.size());
    int k = 0;
    for (int v : s.s) {
        k += v;
    }
    std::vector<int> rem = s.s;
    OrderingVector pi;
    pi.pi.reserve(static_cast<size_t>(k));
    int l = 1;
    for (int i = 1; i <= k; ++i) {
        if (rem[static_cast<size_t>(l - 1)] == 0) {
            l = 1;
        }
        internal_check(rem[static_cast<size_t>(l - 1)] > 0,
                       "vertical ordering cursor must land on a nonempty cluster");
        pi.pi.push_back(l);
        --rem[static_cast<size_t>(l - 1)];
        l = (l % L) + 1;
    }
    return pi;
}

SelectionVector horizontal_selection(const SystemParams& p) {
    std::vector<int> s(static_cast<size_t>(p.L), 0);
    const int full = p.k / p.n_I;
    for (int i = 0; i < full; ++i) {
        s[static_cast<size_t>(i)] = p.n_I;
    }
    if (full < p.L) {
        s[static_cast<size_t>(full)] = p.k % p.n_I;
    }
    return SelectionVector{std::move(s)};
}

Rat cut_lower_bound(const SystemParams& p, const ResourcePoint& r, const SelectionVector& s,
                    const OrderingVector& pi) {
    if (static_cast<int>(pi.pi.size()) != p.k) {
        throw std::invalid_argument("ordering vector must have exactly k entries");
    }
    std::vector<int> used(static_cast<size_t>(p.L), 0);
    Rat total = 0;
    for (int i = 1; i <= p.k; ++i) {
        const int l = pi.pi[static_cast<size_t>(i - 1)];
        if (l < 1 || l > p.L) {
            throw std::invalid_argument("ordering entries must be cluster indices in [1, L]");
        }
        const int e = used[static_cast<size_t>(l - 1)]++;
        const int a = p.n_I - 1 - e;
        Rat omega = Rat(a) * r.beta_I + Rat(p.n - i - a) * r.beta_c;
        total += omega < r.alpha ? omega : r.alpha;
    }
    for (int l = 0; l < p.L; ++l) {
        if (used[static_cast<size_t>(l)] != s.s[static_cast<size_t>(l)]) {
            throw std::invalid_argument("ordering vector does not match the selection vector");
        }
    }
    return total;
}

BruteForceResult brute_force_capacity(const SystemParams& p, const ResourcePoint& r,
                                      long long cap) {
    const std::vector<SelectionVector> candidates = enumerate_selection_vectors(p);
    internal_check(!candidates.empty(), "at least one selection vector must exist");
    for (const SelectionVector& s : candidates) {
        check_cap(s, cap);
    }
    const std::vector<Rat> table = standard_table(p, r);
    OrderingMinimizer minimizer(p.k, table);

    bool have = false;
    BruteForceResult result;
    for (const SelectionVector& s : candidates) {
        MinOutcome outcome = minimizer.minimize(s.s);
        if (!have || outcome.value < result.capacity) {
            have = true;
            result.capacity = outcome.value;
            result.argmin_s = s;
            result.argmin_pi = OrderingVector{outcome.ordering};
        }
    }
    return result;
}

Rat general_capacity(const SystemParams& p, int d_I, int d_c, const ResourcePoint& r,
                     long long cap) {
    if (d_I < 1 || d_I > p.n_I - 1) {
        throw std::invalid_argument("d_I must lie in [1, n_I - 1]");
    }
    if (d_c < 1 || d_c > p.n - p.n_I) {
        throw std::invalid_argument("d_c must lie in [1, n - n_I]");
    }
    const std::vector<SelectionVector> candidates = enumerate_selection_vectors(p);
    for (const SelectionVector& s : candidates) {
        check_cap(s, cap);
    }
    // gamma_I and gamma_c are fixed totals; fewer helpers means more bandwidth
    // per helper.  The derived pair may have beta_c' > beta_I'; that is part of
    // the comparison semantics, not an invalid resource point.
    const Rat beta_I = r.gamma_I / d_I;
    const Rat beta_c = r.gamma_c / d_c;
    const std::vector<Rat> table = general_table(p, d_I, d_c, r.alpha, r.gamma, beta_I, beta_c);
    OrderingMinimizer minimizer(p.k, table);

    bool have = false;
    Rat best = 0;
    for (const SelectionVector& s : candidates) {
        MinOutcome outcome = minimizer.minimize(s.s);
        if (!have || outcome.value < best) {
            have = true;
            best = outcome.value;
        }
    }
    return best;
}

}  // namespace clustercap
