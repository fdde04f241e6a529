// grasscode: rank/unrank subspaces of G_q(n,k), count them, and build greedy
// lexicographic subspace codes. See README.md for the text formats.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "grasscode/grasscode.hpp"

using namespace grasscode;
using nlohmann::json;

namespace {

SubspaceTextInput read_input(const std::string& path) {
    if (path.empty()) return read_subspace_text(std::cin);
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open input file: " + path);
    return read_subspace_text(in);
}

json rref_to_json(const SubspaceRREF& x) {
    json rows = json::array();
    for (int r = 0; r < x.k; ++r) {
        json row = json::array();
        for (int c = 0; c < x.n; ++c) row.push_back(int(x.re.at(r, c)));
        rows.push_back(std::move(row));
    }
    return rows;
}

std::string idvec_string(const SubspaceRREF& x) {
    std::string s;
    for (auto b : x.idvec) s += char('0' + b);
    return s;
}

Scheme parse_scheme(const std::string& name) { return scheme_from_name(name); }

HybridConfig hybrid_config(const GrassmannParams& params, int threshold_flag) {
    int t = threshold_flag >= 0 ? threshold_flag : HybridConfig::default_threshold(params);
    return HybridConfig::make(params, t);
}

// ---------------------------------------------------------------------------
// selftest: quick exhaustive desk-scale suites
// ---------------------------------------------------------------------------

bool selftest_field_axioms() {
    for (int q : {2, 3, 4, 5, 7, 8, 9}) {
        auto f = build_field(q);
        for (int a = 0; a < q; ++a) {
            if (f.add(Elem(a), 0) != a || f.mul(Elem(a), 1) != a) return false;
            if (f.add(Elem(a), f.neg(Elem(a))) != 0) return false;
            if (a != 0 && f.mul(Elem(a), f.inv(Elem(a))) != 1) return false;
        }
        for (int a = 0; a < q; ++a)
            for (int b = 0; b < q; ++b)
                for (int c = 0; c < q; ++c) {
                    if (f.add(f.add(Elem(a), Elem(b)), Elem(c)) != f.add(Elem(a), f.add(Elem(b), Elem(c))))
                        return false;
                    if (f.mul(f.mul(Elem(a), Elem(b)), Elem(c)) != f.mul(Elem(a), f.mul(Elem(b), Elem(c))))
                        return false;
                    if (f.mul(Elem(a), f.add(Elem(b), Elem(c))) !=
                        f.add(f.mul(Elem(a), Elem(b)), f.mul(Elem(a), Elem(c))))
                        return false;
                }
    }
    return true;
}

bool selftest_vector_diagram() {
    for (int n = 1; n <= 7; ++n)
        for (int k = 0; k <= n; ++k)
            for (int mask = 0; mask < (1 << n); ++mask) {
                int weight = 0;
                for (int c = 0; c < n; ++c) weight += (mask >> c) & 1;
                if (weight != k) continue;
                std::vector<std::uint8_t> v(std::size_t(n));
                for (int c = 0; c < n; ++c) v[std::size_t(c)] = (mask >> c) & 1;
                if (diagram_to_vector(vector_to_diagram(v, n, k), n, k) != v) return false;
            }
    return true;
}

bool selftest_worked_values() {
    if (p_box(21, 21, 21) != 792) return false;
    if (gaussian(6, 3, 2) != 1395) return false;

    GrassmannParams params(6, 3, 2);
    MatrixGF m(3, 6);
    int rows[3][6] = {{0, 1, 1, 0, 0, 1}, {0, 0, 0, 1, 0, 0}, {0, 0, 0, 0, 1, 1}};
    for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 6; ++c) m.at(r, c) = Elem(rows[r][c]);
    auto x = subspace_from_rref(std::move(m), 6, 2);
    if (encode_extended(x, params) != 928) return false;
    if (!(decode_extended(928, params) == x)) return false;
    return true;
}

bool selftest_bijections() {
    struct Case {
        int n, k, q;
    };
    for (auto [n, k, q] : {Case{4, 2, 2}, Case{5, 2, 2}, Case{4, 2, 3}}) {
        GrassmannParams params(n, k, q);
        auto all = all_subspaces(params);
        if (BigCount(all.size()) != params.total()) return false;
        auto cfg = HybridConfig::make(params, HybridConfig::default_threshold(params));

        auto sorted = all;
        std::sort(sorted.begin(), sorted.end(), [&](const auto& a, const auto& b) {
            return compare_tableaux_order(a, b, params) == std::strong_ordering::less;
        });
        for (std::size_t i = 0; i < sorted.size(); ++i) {
            if (encode_ferrers(sorted[i], params) != BigIndex(long(i))) return false;
            if (!(decode_ferrers(BigIndex(long(i)), params) == sorted[i])) return false;
        }
        std::sort(sorted.begin(), sorted.end(), [&](const auto& a, const auto& b) {
            return compare_extended(a, b) == std::strong_ordering::less;
        });
        for (std::size_t i = 0; i < sorted.size(); ++i) {
            if (encode_extended(sorted[i], params) != BigIndex(long(i))) return false;
            if (!(decode_extended(BigIndex(long(i)), params) == sorted[i])) return false;
        }
        std::vector<char> seen(all.size(), 0);
        for (const auto& x : all) {
            BigIndex i = encode_hybrid(x, params, cfg);
            if (i < 0 || i >= params.total()) return false;
            if (!(decode_hybrid(i, params, cfg) == x)) return false;
            auto& flag = seen[std::size_t(i.convert_to<long>())];
            if (flag) return false;
            flag = 1;
        }
    }
    return true;
}

bool selftest_metric() {
    GrassmannParams params(5, 2, 2);
    auto all = all_subspaces(params);
    std::vector<std::vector<int>> dist(all.size(), std::vector<int>(all.size(), 0));
    for (std::size_t i = 0; i < all.size(); ++i)
        for (std::size_t j = 0; j < all.size(); ++j) {
            dist[i][j] = subspace_distance(all[i], all[j], params.field());
            if ((dist[i][j] == 0) != (i == j)) return false;
        }
    for (std::size_t i = 0; i < all.size(); ++i)
        for (std::size_t j = 0; j < all.size(); ++j) {
            if (dist[i][j] != dist[j][i]) return false;
            for (std::size_t l = 0; l < all.size(); ++l)
                if (dist[i][l] > dist[i][j] + dist[j][l]) return false;
        }
    return true;
}

bool selftest_lexicode() {
    GrassmannParams params(4, 2, 2);
    for (Scheme s : {Scheme::ferrers, Scheme::extended}) {
        auto build = build_lexicode(params, 4, s);
        if (!verify_min_distance(build.codewords, 4, params.field()).ok) return false;

        auto all = all_subspaces(params);
        std::sort(all.begin(), all.end(), [&](const auto& a, const auto& b) {
            if (s == Scheme::ferrers) return compare_tableaux_order(a, b, params) == std::strong_ordering::less;
            return compare_extended(a, b) == std::strong_ordering::less;
        });
        std::vector<SubspaceRREF> expect;
        for (const auto& x : all) {
            bool ok = true;
            for (const auto& y : expect)
                if (subspace_distance(x, y, params.field()) < 4) {
                    ok = false;
                    break;
                }
            if (ok) expect.push_back(x);
        }
        if (!(build.codewords == expect)) return false;
    }
    return true;
}

int run_selftest(bool as_json) {
    struct Suite {
        const char* name;
        bool (*fn)();
    };
    const Suite suites[] = {
        {"field-axioms", selftest_field_axioms},   {"vector-diagram-bijection", selftest_vector_diagram},
        {"worked-values", selftest_worked_values}, {"scheme-bijections", selftest_bijections},
        {"distance-metric", selftest_metric},      {"lexicode-greedy", selftest_lexicode},
    };
    bool all_ok = true;
    json results = json::array();
    for (const auto& s : suites) {
        bool ok = s.fn();
        all_ok = all_ok && ok;
        if (as_json)
            results.push_back({{"name", s.name}, {"pass", ok}});
        else
            std::cout << (ok ? "PASS " : "FAIL ") << s.name << '\n';
    }
    if (as_json) std::cout << json{{"ok", all_ok}, {"suites", results}}.dump() << '\n';
    return all_ok ? 0 : 1;
}

// ---------------------------------------------------------------------------
// bench: empirical scaling of the extended-representation codec
// ---------------------------------------------------------------------------

struct BenchRow {
    int n, k;
    long product;  // n * k * (n-k)
    double encode_us;
    double decode_us;
};

std::vector<BenchRow> run_bench_grid(int max_n, int samples) {
    std::vector<BenchRow> rows;
    std::mt19937_64 rng(12345);
    for (int n = 16; n <= max_n; n = n * 3 / 2) {
        int k = n / 2;
        GrassmannParams params(n, k, 2);

        std::vector<BigIndex> indices;
        for (int s = 0; s < samples; ++s) {
            BigIndex r = 0;
            for (int w = 0; w < (params.cells() + 63) / 64 + 1; ++w)
                r = (r << 64) | BigCount(rng());
            indices.push_back(r % params.total());
        }
        std::vector<SubspaceRREF> subs;
        subs.reserve(indices.size());
        for (const auto& i : indices) subs.push_back(decode_extended(i, params));

        auto t0 = std::chrono::steady_clock::now();
        BigIndex sink = 0;
        for (const auto& x : subs) sink += encode_extended(x, params);
        auto t1 = std::chrono::steady_clock::now();
        for (const auto& i : indices) sink += decode_extended(i, params).re.rows;
        auto t2 = std::chrono::steady_clock::now();
        if (sink < 0) std::cerr << "";  // keep the measured work alive

        double enc = std::chrono::duration<double, std::micro>(t1 - t0).count() / samples;
        double dec = std::chrono::duration<double, std::micro>(t2 - t1).count() / samples;
        rows.push_back({n, k, long(n) * k * (n - k), enc, dec});
    }
    return rows;
}

double loglog_slope(const std::vector<BenchRow>& rows) {
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (const auto& r : rows) {
        double x = std::log(double(r.product)), y = std::log(r.encode_us);
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
    }
    double m = double(rows.size());
    return (m * sxy - sx * sy) / (m * sxx - sx * sx);
}

int run_bench(int max_n, int samples, bool as_json) {
    auto rows = run_bench_grid(max_n, samples);
    double slope = loglog_slope(rows);
    if (as_json) {
        json out;
        out["rows"] = json::array();
        for (const auto& r : rows)
            out["rows"].push_back({{"n", r.n},
                                   {"k", r.k},
                                   {"nk(n-k)", r.product},
                                   {"encode_us", r.encode_us},
                                   {"decode_us", r.decode_us}});
        out["loglog_slope_encode_vs_nk(n-k)"] = slope;
        std::cout << out.dump() << '\n';
    } else {
        std::cout << "n\tk\tnk(n-k)\tencode_us\tdecode_us\n";
        for (const auto& r : rows)
            std::cout << r.n << '\t' << r.k << '\t' << r.product << '\t' << r.encode_us << '\t'
                      << r.decode_us << '\n';
        std::cout << "log-log slope of encode time against nk(n-k): " << slope << '\n';
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"enumerative coding for the Grassmannian G_q(n,k)"};
    app.require_subcommand(1);

    // canonicalize
    std::string canon_input;
    bool canon_json = false;
    auto* canon = app.add_subcommand("canonicalize", "print RREF, identifying vector and tableaux");
    canon->add_option("--input", canon_input, "input file (default: stdin)");
    canon->add_flag("--json", canon_json, "emit a JSON object");

    // encode
    std::string enc_scheme = "extended", enc_input;
    int enc_threshold = -1;
    bool enc_json = false;
    auto* enc = app.add_subcommand("encode", "rank a subspace under a scheme");
    enc->add_option("--scheme", enc_scheme, "ferrers | extended | hybrid")->capture_default_str();
    enc->add_option("--threshold", enc_threshold, "hybrid diagram-size threshold (default: cover 90%)");
    enc->add_option("--input", enc_input, "input file (default: stdin)");
    enc->add_flag("--json", enc_json, "emit a JSON object");

    // decode
    std::string dec_scheme = "extended", dec_index;
    int dec_n = 0, dec_k = 0, dec_q = 0, dec_threshold = -1;
    bool dec_json = false;
    auto* dec = app.add_subcommand("decode", "unrank an index back to a subspace");
    dec->add_option("--scheme", dec_scheme, "ferrers | extended | hybrid")->capture_default_str();
    dec->add_option("--index", dec_index, "decimal index")->required();
    dec->add_option("--n", dec_n, "ambient dimension")->required();
    dec->add_option("--k", dec_k, "subspace dimension")->required();
    dec->add_option("--q", dec_q, "field order")->required();
    dec->add_option("--threshold", dec_threshold, "hybrid diagram-size threshold");
    dec->add_flag("--json", dec_json, "emit a JSON object");

    // distance
    std::vector<std::string> dist_files;
    bool dist_json = false;
    auto* dist = app.add_subcommand("distance", "subspace distance between two inputs");
    dist->add_option("files", dist_files, "two input files (default: two blocks on stdin)")->expected(0, 2);
    dist->add_flag("--json", dist_json, "emit a JSON object");

    // count
    std::vector<int> cnt_gaussian, cnt_pbox, cnt_alphas;
    bool cnt_json = false;
    auto* cnt = app.add_subcommand("count", "Gaussian coefficients and partition counts");
    cnt->add_option("--gaussian", cnt_gaussian, "n k q: number of k-subspaces of F_q^n")->expected(3);
    cnt->add_option("--pbox", cnt_pbox, "m k eta: diagrams of size m in a k x eta box")->expected(3);
    cnt->add_option("--alphas", cnt_alphas, "n k q: the whole alpha table")->expected(3);
    cnt->add_flag("--json", cnt_json, "emit a JSON object");

    // lexicode
    int lex_n = 0, lex_k = 0, lex_q = 0, lex_d = 0, lex_threshold = -1, lex_threads = 0;
    std::string lex_order = "ferrers", lex_checkpoint, lex_limit;
    bool lex_json = false, lex_print = false;
    auto* lex = app.add_subcommand("lexicode", "greedy minimum-distance code construction");
    lex->add_option("--n", lex_n)->required();
    lex->add_option("--k", lex_k)->required();
    lex->add_option("--q", lex_q)->required();
    lex->add_option("--d", lex_d, "minimum subspace distance (even)")->required();
    lex->add_option("--order", lex_order, "ferrers | extended | hybrid")->capture_default_str();
    lex->add_option("--threshold", lex_threshold, "hybrid diagram-size threshold");
    lex->add_option("--limit", lex_limit, "stop after this many indices (decimal)");
    lex->add_option("--checkpoint", lex_checkpoint, "checkpoint file; resumed from when present");
    lex->add_option("--threads", lex_threads, "worker threads (default: cores, capped by GRASSCODE_THREADS)");
    lex->add_flag("--print", lex_print, "print the codewords, one row-major line each");
    lex->add_flag("--json", lex_json, "emit a JSON object");

    // selftest
    bool st_json = false;
    auto* st = app.add_subcommand("selftest", "run the exhaustive desk-scale suites");
    st->add_flag("--json", st_json, "emit a JSON object");

    // bench
    int bench_max_n = 54, bench_samples = 200;
    bool bench_json = false;
    auto* bench = app.add_subcommand("bench", "empirical encode/decode timing grid");
    bench->add_option("--max-n", bench_max_n, "largest ambient dimension")->capture_default_str();
    bench->add_option("--samples", bench_samples, "subspaces per grid point")->capture_default_str();
    bench->add_flag("--json", bench_json, "emit a JSON object");

    try {
        app.parse(argc, argv);

        if (canon->parsed()) {
            auto in = read_input(canon_input);
            auto field = build_field(in.q);
            auto x = canonicalize_input(in, field);
            auto t = tableaux_of_subspace(x);
            if (canon_json) {
                json out{{"n", x.n}, {"k", x.k}, {"q", x.q}};
                out["rref"] = rref_to_json(x);
                out["v"] = idvec_string(x);
                out["diagram"] = t.diagram.cols_display();
                json rows = json::array();
                for (const auto& row : tableaux_rows(t)) {
                    json jr = json::array();
                    for (Elem e : row) jr.push_back(int(e));
                    rows.push_back(std::move(jr));
                }
                out["tableaux_rows"] = rows;
                std::cout << out.dump() << '\n';
            } else {
                std::cout << format_subspace(x);
                std::cout << "v " << idvec_string(x) << '\n';
                std::cout << "tableaux\n";
                for (const auto& row : tableaux_rows(t)) {
                    for (std::size_t i = 0; i < row.size(); ++i) std::cout << (i ? " " : "") << int(row[i]);
                    std::cout << '\n';
                }
            }
            return 0;
        }

        if (enc->parsed()) {
            auto in = read_input(enc_input);
            auto field = build_field(in.q);
            auto x = canonicalize_input(in, field);
            GrassmannParams params(in.n, in.k, in.q);
            Scheme scheme = parse_scheme(enc_scheme);
            BigIndex index;
            if (scheme == Scheme::hybrid) {
                auto cfg = hybrid_config(params, enc_threshold);
                index = encode_hybrid(x, params, cfg);
            } else {
                index = encode_subspace(x, params, scheme);
            }
            if (enc_json)
                std::cout << json{{"scheme", enc_scheme}, {"n", in.n}, {"k", in.k}, {"q", in.q},
                                  {"index", index.str()}}
                                 .dump()
                          << '\n';
            else
                std::cout << index.str() << '\n';
            return 0;
        }

        if (dec->parsed()) {
            GrassmannParams params(dec_n, dec_k, dec_q);
            Scheme scheme = parse_scheme(dec_scheme);
            BigIndex index;
            try {
                index = BigIndex(dec_index);
            } catch (const std::exception&) {
                throw std::invalid_argument("decode: --index is not a decimal integer");
            }
            SubspaceRREF x = scheme == Scheme::hybrid
                                 ? decode_hybrid(index, params, hybrid_config(params, dec_threshold))
                                 : decode_subspace(index, params, scheme);
            if (dec_json) {
                json out{{"n", x.n}, {"k", x.k}, {"q", x.q}, {"index", index.str()}};
                out["rref"] = rref_to_json(x);
                out["v"] = idvec_string(x);
                std::cout << out.dump() << '\n';
            } else {
                std::cout << format_subspace(x);
            }
            return 0;
        }

        if (dist->parsed()) {
            SubspaceTextInput ia, ib;
            if (dist_files.size() == 2) {
                ia = read_input(dist_files[0]);
                ib = read_input(dist_files[1]);
            } else if (dist_files.empty()) {
                ia = read_subspace_text(std::cin);
                ib = read_subspace_text(std::cin);
            } else {
                throw std::invalid_argument("distance: give two files or feed two blocks on stdin");
            }
            if (ia.q != ib.q || ia.n != ib.n)
                throw std::invalid_argument("distance: ambient parameters differ");
            auto field = build_field(ia.q);
            auto a = canonicalize_input(ia, field);
            auto b = canonicalize_input(ib, field);
            int d = subspace_distance(a, b, field);
            if (dist_json)
                std::cout << json{{"distance", d}}.dump() << '\n';
            else
                std::cout << d << '\n';
            return 0;
        }

        if (cnt->parsed()) {
            json out;
            std::ostringstream text;
            if (!cnt_gaussian.empty()) {
                auto v = gaussian(cnt_gaussian[0], cnt_gaussian[1], cnt_gaussian[2]);
                out["gaussian"] = v.str();
                text << v.str() << '\n';
            }
            if (!cnt_pbox.empty()) {
                auto v = p_box(cnt_pbox[0], cnt_pbox[1], cnt_pbox[2]);
                out["pbox"] = v.str();
                text << v.str() << '\n';
            }
            if (!cnt_alphas.empty()) {
                int n = cnt_alphas[0], k = cnt_alphas[1];
                if (k < 0 || k > n) throw std::out_of_range("count: need 0 <= k <= n");
                auto alphas = alpha_vector(k, n - k);
                json arr = json::array();
                for (long i = 0; i < long(alphas.size()); ++i) {
                    arr.push_back(alphas[std::size_t(i)].str());
                    text << i << ' ' << alphas[std::size_t(i)].str() << '\n';
                }
                out["alphas"] = arr;
            }
            if (out.empty()) throw std::invalid_argument("count: pick --gaussian, --pbox or --alphas");
            if (cnt_json)
                std::cout << out.dump() << '\n';
            else
                std::cout << text.str();
            return 0;
        }

        if (lex->parsed()) {
            GrassmannParams params(lex_n, lex_k, lex_q);
            LexicodeOptions opts;
            if (!lex_limit.empty()) opts.index_limit = BigIndex(lex_limit);
            if (!lex_checkpoint.empty()) opts.checkpoint_path = lex_checkpoint;
            if (lex_threshold >= 0) opts.hybrid_threshold = lex_threshold;
            opts.threads = lex_threads;
            auto build = build_lexicode(params, lex_d, parse_scheme(lex_order), opts);
            if (lex_json) {
                json out{{"n", build.n},       {"k", build.k},
                         {"q", build.q},       {"d", build.d},
                         {"order", lex_order}, {"next_index", build.next_index.str()},
                         {"size", build.codewords.size()}};
                if (lex_print) {
                    json words = json::array();
                    for (const auto& x : build.codewords) words.push_back(rref_to_json(x));
                    out["codewords"] = words;
                }
                std::cout << out.dump() << '\n';
            } else {
                std::cout << build.n << ' ' << build.k << ' ' << build.q << ' ' << build.d << ' '
                          << lex_order << ' ' << build.next_index.str() << ' ' << build.codewords.size()
                          << '\n';
                if (lex_print)
                    for (const auto& x : build.codewords) {
                        for (int r = 0; r < x.k; ++r)
                            for (int c = 0; c < x.n; ++c)
                                std::cout << (r == 0 && c == 0 ? "" : " ") << int(x.re.at(r, c));
                        std::cout << '\n';
                    }
            }
            return 0;
        }

        if (st->parsed()) return run_selftest(st_json);
        if (bench->parsed()) return run_bench(bench_max_n, bench_samples, bench_json);

        return 0;
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return 1;
    } catch (const std::out_of_range& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
}
