// Copyright 2026 The ffsi Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Experiment runner: exact interval statistics and cone point counts over
// F_q[x], reported as CSV or JSON.

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "ffsi/format.hpp"
#include "ffsi/geometry.hpp"
#include "ffsi/intervals.hpp"

using namespace ffsi;
using nlohmann::json;

namespace {

Partition parse_parts(const std::string& s) {
    Partition p;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, '-')) {
        try {
            p.push_back(std::stoi(tok));
        } catch (...) {
            throw InvalidConfig("bad partition entry: " + tok);
        }
    }
    std::sort(p.begin(), p.end(), std::greater<int>());
    if (!is_partition(p)) throw InvalidConfig("not a partition: " + s);
    return p;
}

VonMangoldtType parse_function(const std::string& spec, int n) {
    if (spec == "lambda") return lambda_vmt(n);
    if (spec == "mu") return mu_vmt(n);
    if (spec == "one") return one_vmt(n);
    if (spec == "lambda-minus-1") return lambda_minus_one_vmt(n);
    auto colon = spec.find(':');
    if (colon != std::string::npos) {
        std::string kind = spec.substr(0, colon), arg = spec.substr(colon + 1);
        if (kind == "xlambda") {
            auto lam = parse_parts(arg);
            if (partition_sum(lam) != n) throw InvalidConfig("xlambda partition must sum to n");
            return x_lambda_vmt(lam);
        }
        if (kind == "phi") {
            auto ct = parse_parts(arg);
            if (partition_sum(ct) != n) throw InvalidConfig("phi cycle type must sum to n");
            return phi_sigma_vmt(ct);
        }
        if (kind == "custom") {
            std::ifstream in(arg);
            if (!in) throw InvalidConfig("cannot open " + arg);
            VonMangoldtType phi;
            phi.n = n;
            for (auto& C : partitions(n)) phi.weights[C] = 0;
            std::string line;
            while (std::getline(in, line)) {
                if (line.empty()) continue;
                std::stringstream ls(line);
                std::string ct, num, den;
                if (!std::getline(ls, ct, ',') || !std::getline(ls, num, ',') ||
                    !std::getline(ls, den, ','))
                    throw InvalidConfig("bad custom row: " + line);
                auto C = parse_parts(ct);
                if (partition_sum(C) != n) throw InvalidConfig("cycle type must sum to n");
                Int d(den);
                if (d == 0) throw InvalidConfig("zero denominator in custom weights");
                phi.weights[C] = Rat(Int(num), d);
            }
            return phi;
        }
    }
    throw InvalidConfig("unknown function spec: " + spec);
}

std::vector<Partition> parse_sigmas(const std::string& spec, int n) {
    std::vector<Partition> out;
    std::stringstream ss(spec);
    std::string tok;
    while (std::getline(ss, tok, ';')) {
        auto ct = parse_parts(tok);
        if (partition_sum(ct) != n) throw InvalidConfig("sigma cycle type must sum to n");
        out.push_back(ct);
    }
    if (out.empty()) throw InvalidConfig("empty --sigmas");
    return out;
}

struct StatRow {
    Int q;
    int n = 0, h = -1, m = 1;
    std::string function;
    Rat raw, main_term;
    double normalized_dev = 0;
    long long elapsed_ms = 0;
    std::string anchor;  // JSON only: what the main term states
};

struct Output {
    std::string format = "csv";
    std::string path;
    bool timing = true;

    void emit_rows(const std::vector<StatRow>& rows) const {
        std::ostringstream os;
        if (format == "csv") {
            os << "q,n,h,m,function,raw_exact_num,raw_exact_den,main_term_num,"
                  "main_term_den,normalized_dev_float,elapsed_ms\n";
            for (auto& r : rows)
                os << r.q << ',' << r.n << ',' << r.h << ',' << r.m << ',' << r.function
                   << ',' << boost::multiprecision::numerator(r.raw) << ','
                   << boost::multiprecision::denominator(r.raw) << ','
                   << boost::multiprecision::numerator(r.main_term) << ','
                   << boost::multiprecision::denominator(r.main_term) << ','
                   << r.normalized_dev << ',' << (timing ? r.elapsed_ms : 0) << '\n';
        } else {
            json arr = json::array();
            for (auto& r : rows) {
                json j;
                j["q"] = r.q.str();
                j["n"] = r.n;
                j["h"] = r.h;
                j["m"] = r.m;
                j["function"] = r.function;
                j["raw_exact_num"] = boost::multiprecision::numerator(r.raw).str();
                j["raw_exact_den"] = boost::multiprecision::denominator(r.raw).str();
                j["main_term_num"] = boost::multiprecision::numerator(r.main_term).str();
                j["main_term_den"] = boost::multiprecision::denominator(r.main_term).str();
                j["normalized_dev_float"] = r.normalized_dev;
                j["elapsed_ms"] = timing ? r.elapsed_ms : 0;
                j["main_term_meaning"] = r.anchor;
                arr.push_back(j);
            }
            os << arr.dump(2) << '\n';
        }
        write(os.str());
    }

    void write(const std::string& text) const {
        if (path.empty()) {
            std::cout << text;
        } else {
            std::ofstream out(path);
            if (!out) throw InvalidConfig("cannot write " + path);
            out << text;
        }
    }
};

class Timer {
    std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();

  public:
    long long ms() const {
        return std::chrono::duration_cast<std::chrono::milliseconds>(
                   std::chrono::steady_clock::now() - t0)
            .count();
    }
};

struct Common {
    std::int64_t p = 2;
    int r = 1;
    int n = 4;
    int h = 0;
    int m = 2;
    std::uint64_t seed = 0;
    int threads = 1;
    std::uint64_t budget = kDefaultBudget;
};

void add_field_flags(CLI::App* cmd, Common& c) {
    cmd->set_help_flag("--help", "print help");
    cmd->add_option("--p", c.p, "field characteristic (prime)");
    cmd->add_option("--r", c.r, "base extension degree: q = p^r")->check(CLI::Range(1, 16));
    cmd->add_option("--seed", c.seed, "rng seed");
    cmd->add_option("--threads", c.threads, "worker threads")->check(CLI::Range(1, 256));
    cmd->add_option("--budget", c.budget, "max enumerated items");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"arithmetic statistics of polynomials over F_q in short intervals"};
    app.require_subcommand(1);

    Common c;
    Output out;
    std::string function = "lambda";
    std::vector<std::string> functions;
    std::string sigmas_spec;
    std::string qlist;
    int s_param = 3, trials = 100, samples = 1000;

    app.add_option("--format", out.format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}));
    app.add_option("--output", out.path, "output file (default stdout)");
    app.add_flag("!--no-timing", out.timing, "zero the elapsed_ms column");

    auto* pnt = app.add_subcommand("pnt", "sum of Lambda over M_n: the exact q^n identity");
    add_field_flags(pnt, c);
    pnt->add_option("--n", c.n)->required();

    auto* gsum = app.add_subcommand("global-sum", "sum of a function over all of M_n");
    add_field_flags(gsum, c);
    gsum->add_option("--n", c.n)->required();
    gsum->add_option("--function", function);

    auto* var = app.add_subcommand("variance", "variance of psi over short intervals");
    add_field_flags(var, c);
    var->add_option("--n", c.n)->required();
    var->add_option("--h", c.h)->required();
    var->add_option("--function", function);

    auto* cov = app.add_subcommand("covariance", "covariance of two psi statistics");
    add_field_flags(cov, c);
    cov->add_option("--n", c.n)->required();
    cov->add_option("--h", c.h)->required();
    cov->add_option("--functions", functions)->delimiter(',')->expected(2);

    auto* mom = app.add_subcommand("moments", "m-th moment of psi products");
    add_field_flags(mom, c);
    mom->add_option("--n", c.n)->required();
    mom->add_option("--h", c.h)->required();
    mom->add_option("--m", c.m)->check(CLI::Range(1, 8));
    mom->add_option("--function", function, "applied m times unless --functions given");
    mom->add_option("--functions", functions)->delimiter(',');

    auto* ctab = app.add_subcommand("char-table", "irreducible character table of S_n");
    ctab->add_option("--n", c.n)->required()->check(CLI::Range(1, 12));

    auto* pc = app.add_subcommand("point-count", "constrained cone point count");
    add_field_flags(pc, c);
    pc->add_option("--n", c.n)->required();
    pc->add_option("--h", c.h)->required();
    pc->add_option("--m", c.m)->check(CLI::Range(1, 8));
    pc->add_option("--sigmas", sigmas_spec, "cycle types, e.g. 3-1;2-1-1")->required();

    auto* jp = app.add_subcommand("jacobian-probe", "sampled m=2 singularity criterion");
    add_field_flags(jp, c);
    jp->add_option("--n", c.n)->required();
    jp->add_option("--h", c.h)->required();
    jp->add_option("--m", c.m)->check(CLI::IsMember({2}));
    jp->add_option("--samples", samples);

    auto* dp = app.add_subcommand("dim-probe", "cone point counts across a q grid");
    add_field_flags(dp, c);
    dp->add_option("--n", c.n)->required();
    dp->add_option("--h", c.h)->required();
    dp->add_option("--m", c.m)->check(CLI::Range(1, 8));
    dp->add_option("--qlist", qlist, "comma-separated prime powers")->required();

    auto* dc = app.add_subcommand("det-check", "minor determinant product identity trials");
    dc->add_option("--s", s_param)->check(CLI::Range(1, 8));
    dc->add_option("--r", c.r)->check(CLI::Range(1, 8));
    dc->add_option("--trials", trials);
    dc->add_option("--seed", c.seed);

    for (auto* sc : app.get_subcommands([](const CLI::App*) { return true; })) sc->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        Timer timer;
        if (app.got_subcommand(ctab)) {
            const auto& tab = character_table(c.n);
            std::ostringstream os;
            os << "lambda";
            for (auto& mu : tab.parts) {
                os << ',';
                for (std::size_t i = 0; i < mu.size(); ++i)
                    os << (i ? "-" : "") << mu[i];
            }
            os << '\n';
            for (std::size_t a = 0; a < tab.parts.size(); ++a) {
                for (std::size_t i = 0; i < tab.parts[a].size(); ++i)
                    os << (i ? "-" : "") << tab.parts[a][i];
                for (std::size_t b = 0; b < tab.parts.size(); ++b)
                    os << ',' << tab.at(a, b);
                os << '\n';
            }
            out.write(os.str());
            return 0;
        }
        if (app.got_subcommand(dc)) {
            std::mt19937_64 rng(c.seed);
            RationalField Q;
            long long pass = 0, total = 0;
            auto run_trials = [&](auto& K, auto draw) {
                for (int t = 0; t < trials; ++t) {
                    std::vector<typename std::decay_t<decltype(K)>::Elem> xs;
                    for (int i = 0; i < c.r; ++i) xs.push_back(draw());
                    std::vector<int> cols(c.r);
                    std::iota(cols.begin(), cols.end(), 0);
                    std::shuffle(cols.begin(), cols.end(), rng);
                    cols.resize(s_param);
                    std::sort(cols.begin(), cols.end());
                    auto lhs = b_det(K, xs, cols);
                    auto prod = K.one();
                    for (std::size_t a = 0; a < cols.size(); ++a)
                        for (std::size_t b = a + 1; b < cols.size(); ++b)
                            prod = K.mul(prod, K.sub(xs[cols[a]], xs[cols[b]]));
                    ++total;
                    if (K.eq(lhs, prod)) ++pass;
                }
            };
            if (s_param > c.r) throw InvalidConfig("det-check: need s <= r");
            for (std::int64_t p : {std::int64_t(101), std::int64_t(10007)}) {
                auto t = build_tower(p, 1, 1);
                run_trials(t.base, [&] { return t.base.random(rng); });
            }
            run_trials(Q, [&]() -> Rat {
                return Rat(static_cast<std::int64_t>(rng() % 2001) - 1000,
                           static_cast<std::int64_t>(rng() % 9) + 1);
            });
            std::ostringstream os;
            os << "s,r,trials,pass\n"
               << s_param << ',' << c.r << ',' << total << ',' << pass << '\n';
            out.write(os.str());
            return pass == total ? 0 : 1;
        }

        FieldTower tower = build_tower(c.p, c.r, 1);
        auto& K = tower.base;
        Int q = K.size();
        std::vector<StatRow> rows;

        if (app.got_subcommand(pnt) || app.got_subcommand(gsum)) {
            std::string fname = app.got_subcommand(pnt) ? "lambda" : function;
            auto phi = parse_function(fname, c.n);
            StatRow row{q, c.n, -1, 1, fname};
            row.raw = global_sum(K, phi, c.n, c.budget, c.threads);
            row.main_term = weight_total(phi) * Rat(ipow(q, static_cast<unsigned>(c.n)));
            row.normalized_dev = (row.raw - row.main_term).convert_to<double>();
            row.anchor = "exact global sum: (sum of class weights) * q^n";
            row.elapsed_ms = timer.ms();
            rows.push_back(std::move(row));
        } else if (app.got_subcommand(var) || app.got_subcommand(cov)) {
            std::string f1 = app.got_subcommand(var) ? function : functions.at(0);
            std::string f2 = app.got_subcommand(var) ? function : functions.at(1);
            auto phi1 = parse_function(f1, c.n);
            auto phi2 = parse_function(f2, c.n);
            StatRow row{q, c.n, c.h, 2, f1 == f2 ? f1 : f1 + "|" + f2};
            row.raw = covariance(K, phi1, phi2, c.n, c.h, c.budget, c.threads);
            row.main_term = predicted_covariance(phi1, phi2, c.n, c.h, q);
            double qd = q.convert_to<double>();
            row.normalized_dev = (row.raw - row.main_term).convert_to<double>() /
                                 (std::pow(qd, c.h) * std::sqrt(qd));
            row.anchor = "short-interval covariance main term: q^{h+1} * restricted "
                         "character sum";
            row.elapsed_ms = timer.ms();
            rows.push_back(std::move(row));
        } else if (app.got_subcommand(mom)) {
            std::vector<VonMangoldtType> phis;
            std::string fname;
            if (!functions.empty()) {
                c.m = static_cast<int>(functions.size());
                for (auto& f : functions) phis.push_back(parse_function(f, c.n));
                for (auto& f : functions) fname += (fname.empty() ? "" : "|") + f;
            } else {
                for (int i = 0; i < c.m; ++i) phis.push_back(parse_function(function, c.n));
                fname = function;
            }
            auto rep = moment(K, phis, c.n, c.h, c.budget, c.threads);
            StatRow row{q, c.n, c.h, rep.m, fname};
            row.raw = rep.raw_sum;
            row.main_term = rep.main_term;
            row.normalized_dev = rep.normalized_deviation.convert_to<double>();
            row.anchor = "moment main term: product of weight totals times q^{m(h+1)}";
            row.elapsed_ms = timer.ms();
            rows.push_back(std::move(row));
        } else if (app.got_subcommand(pc)) {
            auto cts = parse_sigmas(sigmas_spec, c.n);
            if (static_cast<int>(cts.size()) != c.m)
                c.m = static_cast<int>(cts.size());
            if (c.m >= 3 && c.p <= c.n)
                std::cerr << "warning: m >= 3 with p <= n is outside the proven "
                             "characteristic range; results are exploratory\n";
            std::vector<Permutation> sigmas;
            std::string fname;
            for (auto& ct : cts) {
                sigmas.push_back(representative(ct));
                std::string enc;
                for (std::size_t i = 0; i < ct.size(); ++i)
                    enc += (i ? "-" : "") + std::to_string(ct[i]);
                fname += (fname.empty() ? "" : ";") + enc;
            }
            auto cc = constrained_count(K, sigmas, c.n, c.h, c.budget, c.threads);
            StatRow row{q, c.n, c.h, c.m, fname};
            row.raw = Rat(cc.count);
            row.main_term = Rat(ipow(q, static_cast<unsigned>(c.n + (c.m - 1) * (c.h + 1))));
            row.normalized_dev = (cc.normalized - 1).convert_to<double>();
            row.anchor = "cone point count leading term q^{n+(m-1)(h+1)}";
            row.elapsed_ms = timer.ms();
            rows.push_back(std::move(row));
        } else if (app.got_subcommand(jp)) {
            // coordinates live in a quadratic extension so conjugate root
            // pairs appear among the samples
            FieldTower t2 = build_tower(c.p, c.r, 2);
            auto pts = sample_on_cone_points(t2, c.n, c.h, samples, c.seed);
            long long rank_def = 0, few = 0, agree = 0;
            for (auto& pt : pts) {
                auto [rd, fv] = singular_criterion_m2(t2.top, pt, c.h);
                rank_def += rd;
                few += fv;
                agree += rd == fv;
            }
            std::ostringstream os;
            os << "q,n,h,samples,rank_deficient,few_values,agree,elapsed_ms\n"
               << q << ',' << c.n << ',' << c.h << ',' << samples << ',' << rank_def << ','
               << few << ',' << agree << ',' << (out.timing ? timer.ms() : 0) << '\n';
            out.write(os.str());
            return agree == samples ? 0 : 1;
        } else if (app.got_subcommand(dp)) {
            std::vector<std::pair<std::int64_t, int>> pps;
            std::stringstream ss(qlist);
            std::string tok;
            while (std::getline(ss, tok, ',')) {
                std::int64_t qq = std::stoll(tok);
                std::int64_t p = 2;
                while (qq % p != 0) ++p;
                int r = 0;
                std::int64_t acc = 1;
                while (acc < qq) {
                    acc *= p;
                    ++r;
                }
                if (acc != qq) throw InvalidConfig("not a prime power: " + tok);
                pps.emplace_back(p, r);
            }
            auto table = dimension_probe(c.m, c.n, c.h, pps, c.budget, c.threads);
            std::ostringstream os;
            os << "q,n,h,m,count,ratio\n";
            for (auto& rrow : table)
                os << rrow.q << ',' << c.n << ',' << c.h << ',' << c.m << ',' << rrow.count
                   << ',' << rrow.ratio << '\n';
            out.write(os.str());
            return 0;
        }
        out.emit_rows(rows);
        return 0;
    } catch (const BudgetExceeded& e) {
        std::cerr << "budget exceeded: " << e.what() << '\n';
        return 3;
    } catch (const InvalidConfig& e) {
        std::cerr << "invalid configuration: " << e.what() << '\n';
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
}
