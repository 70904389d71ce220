#include "gallery/guess.h"

#include <algorithm>
#include <ostream>

namespace gallery {

GuessSpace guess_space(const regions::RegionDecomposition& dec, int k) {
    GuessSpace s;
    s.k = k;
    for (const auto& e : dec.elements) {
        s.capacity.push_back(static_cast<int>(std::min<std::size_t>(e.size(), static_cast<std::size_t>(k))));
        s.reflex.push_back(e.is_reflex());
        s.needs_cover.push_back(true);
    }
    return s;
}

namespace {

class Enumerator {
public:
    Enumerator(const GuessSpace& space, const GuessFilter* filter, const std::function<bool(const Guess&)>& visit)
        : space_(space), filter_(filter), visit_(visit), m_(space.capacity.size()) {
        guess_.ig.assign(m_, 0);
        guess_.og.assign(m_, 0);
        guess_.how.assign(m_, {});
    }

    std::uint64_t run() {
        place(0, 0);
        return visited_;
    }

private:
    // ig, lexicographic with element 0 most significant.
    bool place(std::size_t x, int used) {
        if (x == m_) return expand(used);
        for (int c = 0; c <= space_.capacity[x] && used + c <= space_.k; ++c) {
            guess_.ig[x] = c;
            if (!place(x + 1, used + c)) return false;
        }
        guess_.ig[x] = 0;
        return true;
    }

    int chain_cap(std::size_t x, int placed) const {
        if (!space_.needs_cover[x]) return 0;
        if (space_.reflex[x]) return 1;
        int cap = std::min(space_.k, placed);
        if (filter_ && filter_->max_chain) cap = std::min(cap, filter_->max_chain(x));
        return cap;
    }

    void grow(std::size_t x, int length, std::vector<GuardRef>& chain, std::vector<std::vector<GuardRef>>& out) {
        if (static_cast<int>(chain.size()) == length) {
            out.push_back(chain);
            return;
        }
        for (std::size_t e = 0; e < m_; ++e) {
            for (int i = 0; i < guess_.ig[e]; ++i) {
                chain.push_back({e, i});
                if (!filter_ || !filter_->step || filter_->step(x, chain, length)) grow(x, length, chain, out);
                chain.pop_back();
            }
        }
    }

    bool expand(int placed) {
        // chains_[x][o] lists every admissible chain of length o for element x.
        chains_.assign(m_, {});
        for (std::size_t x = 0; x < m_; ++x) {
            int cap = chain_cap(x, placed);
            chains_[x].resize(static_cast<std::size_t>(cap) + 1);
            if (!space_.needs_cover[x]) {
                chains_[x][0].push_back({});
                continue;
            }
            for (int o = 1; o <= cap; ++o) {
                std::vector<GuardRef> chain;
                grow(x, o, chain, chains_[x][o]);
            }
            bool any = false;
            for (int o = 1; o <= cap; ++o) any = any || !chains_[x][o].empty();
            if (!any) return true;
        }
        return pick_og(0);
    }

    bool pick_og(std::size_t x) {
        if (x == m_) return pick_how(0);
        for (std::size_t o = 0; o < chains_[x].size(); ++o) {
            if (chains_[x][o].empty()) continue;
            guess_.og[x] = static_cast<int>(o);
            if (!pick_og(x + 1)) return false;
        }
        return true;
    }

    bool pick_how(std::size_t x) {
        if (x == m_) {
            ++visited_;
            return visit_(guess_);
        }
        for (const auto& chain : chains_[x][static_cast<std::size_t>(guess_.og[x])]) {
            guess_.how[x] = chain;
            if (!pick_how(x + 1)) return false;
        }
        return true;
    }

    const GuessSpace& space_;
    const GuessFilter* filter_;
    const std::function<bool(const Guess&)>& visit_;
    std::size_t m_;
    Guess guess_;
    std::vector<std::vector<std::vector<std::vector<GuardRef>>>> chains_;
    std::uint64_t visited_ = 0;
};

std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b) {
    if (a != 0 && b > UINT64_MAX / a) return UINT64_MAX;
    return a * b;
}

std::uint64_t saturating_add(std::uint64_t a, std::uint64_t b) {
    return b > UINT64_MAX - a ? UINT64_MAX : a + b;
}

}  // namespace

std::uint64_t for_each_guess(const GuessSpace& space, const GuessFilter* filter,
                             const std::function<bool(const Guess&)>& visit) {
    return Enumerator(space, filter, visit).run();
}

std::uint64_t count_guesses(const GuessSpace& space) {
    const std::size_t m = space.capacity.size();
    std::uint64_t total = 0;
    std::vector<int> ig(m, 0);
    // Sum over ig of the product over elements of the number of chains.
    std::function<void(std::size_t, int)> rec = [&](std::size_t x, int used) {
        if (x == m) {
            std::uint64_t g = static_cast<std::uint64_t>(used), product = 1;
            for (std::size_t y = 0; y < m; ++y) {
                if (!space.needs_cover[y]) continue;
                int cap = space.reflex[y] ? 1 : std::min(space.k, used);
                std::uint64_t ways = 0, power = 1;
                for (int o = 1; o <= cap; ++o) {
                    power = saturating_mul(power, g);
                    ways = saturating_add(ways, power);
                }
                product = saturating_mul(product, ways);
            }
            total = saturating_add(total, product);
            return;
        }
        for (int c = 0; c <= space.capacity[x] && used + c <= space.k; ++c) rec(x + 1, used + c);
    };
    rec(0, 0);
    return total;
}

void print_guess(std::ostream& out, const Guess& g) {
    out << "ig=(";
    for (std::size_t x = 0; x < g.ig.size(); ++x) out << (x ? "," : "") << g.ig[x];
    out << ") og=(";
    for (std::size_t x = 0; x < g.og.size(); ++x) out << (x ? "," : "") << g.og[x];
    out << ") how=";
    for (std::size_t x = 0; x < g.how.size(); ++x) {
        out << (x ? ";" : "") << '[';
        for (std::size_t t = 0; t < g.how[x].size(); ++t)
            out << (t ? " " : "") << g.how[x][t].element + 1 << '.' << g.how[x][t].index + 1;
        out << ']';
    }
}

}  // namespace gallery
