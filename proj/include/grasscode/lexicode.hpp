#pragma once

#include <bit>
#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "grasscode/encoders.hpp"

namespace grasscode {

enum class Scheme { ferrers, extended, hybrid };

inline const char* scheme_name(Scheme s) {
    switch (s) {
        case Scheme::ferrers: return "ferrers";
        case Scheme::extended: return "extended";
        case Scheme::hybrid: return "hybrid";
    }
    return "?";
}

inline Scheme scheme_from_name(const std::string& name) {
    if (name == "ferrers") return Scheme::ferrers;
    if (name == "extended") return Scheme::extended;
    if (name == "hybrid") return Scheme::hybrid;
    throw std::invalid_argument("unknown scheme: " + name);
}

inline BigIndex encode_subspace(const SubspaceRREF& x, const GrassmannParams& params, Scheme s,
                                const HybridConfig* cfg = nullptr) {
    switch (s) {
        case Scheme::ferrers: return encode_ferrers(x, params);
        case Scheme::extended: return encode_extended(x, params);
        case Scheme::hybrid: break;
    }
    if (!cfg) throw std::invalid_argument("encode_subspace: hybrid scheme needs a HybridConfig");
    return encode_hybrid(x, params, *cfg);
}

inline SubspaceRREF decode_subspace(const BigIndex& i, const GrassmannParams& params, Scheme s,
                                    const HybridConfig* cfg = nullptr) {
    switch (s) {
        case Scheme::ferrers: return decode_ferrers(i, params);
        case Scheme::extended: return decode_extended(i, params);
        case Scheme::hybrid: break;
    }
    if (!cfg) throw std::invalid_argument("decode_subspace: hybrid scheme needs a HybridConfig");
    return decode_hybrid(i, params, *cfg);
}

namespace detail {

// Bit-packed rows for the q = 2 distance kernel (n <= 64). d(X,Y) equals
// twice the number of X-rows independent of span(Y), so the kernel reduces
// X's rows by Y's pivots and counts the leftover rank.
struct PackedRows {
    std::vector<std::uint64_t> rows;
    std::vector<int> pivots;

    static PackedRows pack(const SubspaceRREF& x) {
        PackedRows p;
        p.rows.reserve(std::size_t(x.k));
        for (int r = 0; r < x.k; ++r) {
            std::uint64_t bits = 0;
            for (int c = 0; c < x.n; ++c)
                if (x.re.at(r, c)) bits |= std::uint64_t(1) << c;
            p.rows.push_back(bits);
        }
        p.pivots = pivot_columns(x.re);
        return p;
    }
};

// Number of rows of x independent of span(y); stops once `enough` is reached.
inline int residual_rank_packed(const PackedRows& x, const PackedRows& y, int enough) {
    std::uint64_t basis[64];
    int lead[64];
    int rank = 0;
    for (std::size_t r = 0; r < x.rows.size(); ++r) {
        std::uint64_t cur = x.rows[r];
        for (std::size_t t = 0; t < y.rows.size(); ++t)
            if ((cur >> y.pivots[t]) & 1) cur ^= y.rows[t];
        while (cur) {
            int p = std::countr_zero(cur);
            int found = -1;
            for (int b = 0; b < rank; ++b)
                if (lead[b] == p) {
                    found = b;
                    break;
                }
            if (found >= 0) {
                cur ^= basis[found];
            } else {
                basis[rank] = cur;
                lead[rank] = p;
                ++rank;
                if (rank >= enough) return rank;
                break;
            }
        }
    }
    return rank;
}

inline bool packed_kernel_applies(const GrassmannParams& params) {
    return params.q() == 2 && params.n() <= 64;
}

}  // namespace detail

struct VerifyResult {
    bool ok = true;
    std::size_t first = 0;
    std::size_t second = 0;
};

// True iff every pair of codewords is at subspace distance >= d; on failure
// the witness pair is returned.
inline VerifyResult verify_min_distance(const std::vector<SubspaceRREF>& code, int d, const FieldTable& field) {
    for (std::size_t i = 0; i < code.size(); ++i)
        for (std::size_t j = i + 1; j < code.size(); ++j)
            if (subspace_distance(code[i], code[j], field) < d) return {false, i, j};
    return {};
}

struct CodeBuild {
    int n = 0, k = 0, q = 0, d = 0;
    Scheme order = Scheme::ferrers;
    std::vector<SubspaceRREF> codewords;
    BigIndex next_index = 0;
};

struct LexicodeOptions {
    std::optional<BigIndex> index_limit;
    std::optional<std::string> checkpoint_path;  // resumed from when the file exists
    std::optional<int> hybrid_threshold;         // default: HybridConfig::default_threshold
    long checkpoint_every = 50000;               // candidate indices between checkpoint writes
    int threads = 0;                             // 0: hardware count, capped by GRASSCODE_THREADS
};

namespace detail {

inline int resolve_thread_count(int requested) {
    int t = requested > 0 ? requested : int(std::max(1u, std::thread::hardware_concurrency()));
    if (const char* env = std::getenv("GRASSCODE_THREADS")) {
        int cap = std::atoi(env);
        if (cap >= 1 && cap < t) t = cap;
    }
    return t;
}

inline void write_checkpoint_file(const std::string& path, const CodeBuild& build) {
    std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp);
        if (!out) throw std::runtime_error("cannot write checkpoint: " + tmp);
        out << build.n << ' ' << build.k << ' ' << build.q << ' ' << build.d << ' '
            << scheme_name(build.order) << ' ' << build.next_index.str() << ' ' << build.codewords.size()
            << '\n';
        for (const auto& x : build.codewords) {
            for (int r = 0; r < x.k; ++r)
                for (int c = 0; c < x.n; ++c) out << (r == 0 && c == 0 ? "" : " ") << int(x.re.at(r, c));
            out << '\n';
        }
    }
    std::filesystem::rename(tmp, path);
}

inline CodeBuild read_checkpoint_file(const std::string& path, const FieldTable& field) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot read checkpoint: " + path);
    CodeBuild build;
    std::string order_name, index_str;
    std::size_t count = 0;
    if (!(in >> build.n >> build.k >> build.q >> build.d >> order_name >> index_str >> count))
        throw std::invalid_argument("checkpoint: malformed header");
    build.order = scheme_from_name(order_name);
    build.next_index = BigIndex(index_str);
    for (std::size_t i = 0; i < count; ++i) {
        MatrixGF re(build.k, build.n);
        for (int r = 0; r < build.k; ++r)
            for (int c = 0; c < build.n; ++c) {
                int v;
                if (!(in >> v)) throw std::invalid_argument("checkpoint: truncated codeword list");
                re.at(r, c) = Elem(v);
            }
        build.codewords.push_back(subspace_from_rref(std::move(re), build.n, field.q()));
    }
    return build;
}

}  // namespace detail

// Greedy lexicographic code construction: visit subspaces in the order given
// by the chosen decoder and keep each one whose distance to all kept
// codewords is at least d. Candidates are decoded and screened in parallel
// batches, but acceptance is decided strictly in index order, so the result
// is identical to the sequential greedy run.
inline CodeBuild build_lexicode(const GrassmannParams& params, int d, Scheme order,
                                const LexicodeOptions& opts = {}) {
    if (d < 2 || d % 2 != 0 || d > 2 * params.k())
        throw std::out_of_range("build_lexicode: d must be even with 2 <= d <= 2k");

    std::optional<HybridConfig> cfg;
    if (order == Scheme::hybrid)
        cfg = HybridConfig::make(params,
                                 opts.hybrid_threshold.value_or(HybridConfig::default_threshold(params)));

    CodeBuild build;
    build.n = params.n();
    build.k = params.k();
    build.q = params.q();
    build.d = d;
    build.order = order;

    if (opts.checkpoint_path && std::filesystem::exists(*opts.checkpoint_path)) {
        build = detail::read_checkpoint_file(*opts.checkpoint_path, params.field());
        if (build.n != params.n() || build.k != params.k() || build.q != params.q() || build.d != d ||
            build.order != order)
            throw std::invalid_argument("checkpoint: parameters do not match the requested build");
    }

    BigIndex limit = params.total();
    if (opts.index_limit && *opts.index_limit < limit) limit = *opts.index_limit;

    const bool packed = detail::packed_kernel_applies(params);
    const int need = d / 2;  // q = 2: distance >= d iff residual rank >= d/2
    std::vector<detail::PackedRows> packed_code;
    if (packed)
        for (const auto& x : build.codewords) packed_code.push_back(detail::PackedRows::pack(x));

    auto compatible = [&](const SubspaceRREF& cand, const detail::PackedRows& pc, std::size_t upto) {
        if (packed) {
            for (std::size_t i = 0; i < upto; ++i)
                if (detail::residual_rank_packed(pc, packed_code[i], need) < need) return false;
        } else {
            for (std::size_t i = 0; i < upto; ++i)
                if (subspace_distance(cand, build.codewords[i], params.field()) < d) return false;
        }
        return true;
    };

    const int threads = detail::resolve_thread_count(opts.threads);
    const long batch_size = std::max(64L, 512L * threads);
    long since_checkpoint = 0;

    while (build.next_index < limit) {
        BigIndex batch_begin = build.next_index;
        long count = batch_size;
        if (BigIndex(batch_begin + count) > limit) count = (limit - batch_begin).convert_to<long>();

        std::vector<SubspaceRREF> cands(static_cast<std::size_t>(count));
        std::vector<detail::PackedRows> cand_packed(static_cast<std::size_t>(count));
        std::vector<char> ok(std::size_t(count), 0);
        const std::size_t screened = build.codewords.size();

        auto work = [&](long begin, long end) {
            for (long t = begin; t < end; ++t) {
                cands[std::size_t(t)] = decode_subspace(batch_begin + t, params, order, cfg ? &*cfg : nullptr);
                if (packed) cand_packed[std::size_t(t)] = detail::PackedRows::pack(cands[std::size_t(t)]);
                ok[std::size_t(t)] = compatible(cands[std::size_t(t)], cand_packed[std::size_t(t)], screened);
            }
        };
        if (threads <= 1 || count < 128) {
            work(0, count);
        } else {
            std::vector<std::thread> pool;
            long chunk = (count + threads - 1) / threads;
            for (int t = 0; t < threads; ++t) {
                long b = t * chunk, e = std::min(count, b + chunk);
                if (b < e) pool.emplace_back(work, b, e);
            }
            for (auto& th : pool) th.join();
        }

        for (long t = 0; t < count; ++t) {
            if (!ok[std::size_t(t)]) continue;
            // Re-screen against codewords accepted inside this batch.
            bool still_ok = true;
            if (packed) {
                for (std::size_t i = screened; i < packed_code.size() && still_ok; ++i)
                    if (detail::residual_rank_packed(cand_packed[std::size_t(t)], packed_code[i], need) < need)
                        still_ok = false;
            } else {
                for (std::size_t i = screened; i < build.codewords.size() && still_ok; ++i)
                    if (subspace_distance(cands[std::size_t(t)], build.codewords[i], params.field()) < d)
                        still_ok = false;
            }
            if (!still_ok) continue;
            if (packed) packed_code.push_back(std::move(cand_packed[std::size_t(t)]));
            build.codewords.push_back(std::move(cands[std::size_t(t)]));
        }

        build.next_index = batch_begin + count;
        since_checkpoint += count;
        if (opts.checkpoint_path && since_checkpoint >= opts.checkpoint_every) {
            detail::write_checkpoint_file(*opts.checkpoint_path, build);
            since_checkpoint = 0;
        }
    }

    if (opts.checkpoint_path) detail::write_checkpoint_file(*opts.checkpoint_path, build);
    return build;
}

}  // namespace grasscode
