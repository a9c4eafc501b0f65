#include "modrep/verify.hpp"

#include <algorithm>
#include <future>
#include <sstream>

#include "modrep/an_classify.hpp"
#include "modrep/js.hpp"
#include "modrep/mullineux.hpp"

namespace modrep::verify {

namespace {

using Clock = std::chrono::steady_clock;

std::string fmt(const Partition &lambda) { return "(" + format_partition(lambda) + ")"; }

std::string fmt(const std::vector<int> &v) {
    std::string out = "[";
    for (std::size_t k = 0; k < v.size(); ++k)
        out += (k ? "," : "") + std::to_string(v[k]);
    return out + "]";
}

std::string fmt(const std::optional<Partition> &lambda) {
    return lambda ? fmt(*lambda) : std::string("absent");
}

std::string fmt(const std::vector<Node> &nodes) {
    std::ostringstream os;
    os << '{';
    for (std::size_t k = 0; k < nodes.size(); ++k)
        os << (k ? "," : "") << nodes[k];
    os << '}';
    return os.str();
}

bool subset(const std::vector<Node> &a, const std::vector<Node> &b) {
    return std::all_of(a.begin(), a.end(), [&](const Node &x) {
        return std::find(b.begin(), b.end(), x) != b.end();
    });
}

// Accumulates one report while a sweep runs.
class Recorder {
public:
    Recorder(LemmaReport &report, const RunOptions &options)
        : report_(report), options_(options) {}

    void count() { ++report_.instances; }

    void fail(std::array<std::int64_t, 3> order, std::string input,
              std::string observed, std::string expected) {
        if (report_.counterexamples.size() < options_.cap)
            report_.counterexamples.push_back({order, std::move(input),
                                               std::move(observed),
                                               std::move(expected)});
        else
            ++report_.truncated;
    }

    void observe(const std::string &key) { ++report_.observations[key]; }

private:
    LemmaReport &report_;
    const RunOptions &options_;
};

struct Instance {
    Prime p;
    int n;
    std::int64_t seq;
    std::int64_t prime_index;
    const Partition &lambda;

    std::array<std::int64_t, 3> order() const { return {prime_index, n, seq}; }
    std::string where() const {
        return "p=" + std::to_string(p.value()) + " " + fmt(lambda);
    }
};

bool in_shard(int key, const RunOptions &options) {
    return key % options.shard_count == options.shard_index;
}

template <class F>
void sweep_partitions(const Sweep &sweep, const RunOptions &options,
                      bool regular_only, F &&visit) {
    for (std::size_t pi = 0; pi < sweep.primes.size(); ++pi) {
        const Prime p(sweep.primes[pi]);
        for (int n = std::max(sweep.n_min, 0); n <= sweep.n_max; ++n) {
            PartitionStream stream(n, p, regular_only);
            std::int64_t seq = 0;
            while (auto lambda = stream.next()) {
                const std::int64_t index = seq++;
                if (!in_shard(lambda->row(1), options))
                    continue;
                visit(Instance{p, n, index, static_cast<std::int64_t>(pi),
                               *lambda});
            }
        }
    }
}

void check_l52(const LemmaCheck &c, const RunOptions &o, Recorder &rec) {
    sweep_partitions(c.sweep, o, false, [&](const Instance &in) {
        rec.count();
        const auto nodes = classify_nodes(in.lambda, in.p, o.orientation);
        if (nodes.total_phi() != nodes.total_epsilon() + 1)
            rec.fail(in.order(), in.where(),
                     "sum phi=" + std::to_string(nodes.total_phi()),
                     "sum eps+1=" + std::to_string(nodes.total_epsilon() + 1));
    });
}

void check_l47(const LemmaCheck &c, const RunOptions &o, Recorder &rec) {
    sweep_partitions(c.sweep, o, true, [&](const Instance &in) {
        rec.count();
        const auto before = classify_nodes(in.lambda, in.p, o.orientation);
        for (int i = 0; i < in.p.value(); ++i) {
            if (before.epsilon(i) == 0)
                continue;
            const auto nu = tilde_e(in.lambda, i, in.p, o.orientation);
            const std::string where = in.where() + " i=" + std::to_string(i);
            if (!nu || !is_p_regular(*nu, in.p)) {
                rec.fail(in.order(), where, "e_i = " + fmt(nu),
                         "a p-regular partition");
                continue;
            }
            const auto after = classify_nodes(*nu, in.p, o.orientation);
            const auto back = tilde_f(*nu, i, in.p, o.orientation);
            if (back != in.lambda)
                rec.fail(in.order(), where, "f_i e_i = " + fmt(back),
                         fmt(in.lambda));
            if (after.epsilon(i) != before.epsilon(i) - 1 ||
                after.phi(i) != before.phi(i) + 1)
                rec.fail(in.order(), where,
                         "eps_i,phi_i of e_i = " +
                             std::to_string(after.epsilon(i)) + "," +
                             std::to_string(after.phi(i)),
                         std::to_string(before.epsilon(i) - 1) + "," +
                             std::to_string(before.phi(i) + 1));
        }
    });
}

void check_l12(const LemmaCheck &c, const RunOptions &o, Recorder &rec) {
    sweep_partitions(c.sweep, o, false, [&](const Instance &in) {
        const auto beta = classify_nodes(in.lambda, in.p, o.orientation);
        for (Node a : removable_nodes(in.lambda)) {
            rec.count();
            const int j = residue_of(a, in.p);
            const Partition alpha_part = remove_node(in.lambda, a);
            const auto alpha = classify_nodes(alpha_part, in.p, o.orientation);
            for (int i = 0; i < in.p.value(); ++i) {
                if (i == j)
                    continue;
                std::ostringstream where;
                where << in.where() << " minus " << a << " i=" << i;
                if (!subset(beta.residues[i].normal, alpha.residues[i].normal))
                    rec.fail(in.order(), where.str(),
                             "normal(beta)=" + fmt(beta.residues[i].normal),
                             "subset of normal(alpha)=" +
                                 fmt(alpha.residues[i].normal));
                if (!subset(alpha.residues[i].conormal,
                            beta.residues[i].conormal))
                    rec.fail(in.order(), where.str(),
                             "conormal(alpha)=" +
                                 fmt(alpha.residues[i].conormal),
                             "subset of conormal(beta)=" +
                                 fmt(beta.residues[i].conormal));
            }
        }
    });
}

std::optional<Partition> safe_mullineux(const Partition &lambda, Prime p,
                                        Orientation o) {
    try {
        return mullineux(lambda, p, o).image;
    } catch (const Error &) {
        return std::nullopt;
    }
}

void check_l17(const LemmaCheck &c, const RunOptions &o, Recorder &rec) {
    sweep_partitions(c.sweep, o, true, [&](const Instance &in) {
        rec.count();
        const auto dual = safe_mullineux(in.lambda, in.p, o.orientation);
        if (!dual) {
            rec.fail(in.order(), in.where(), "Mullineux recursion failed",
                     "lambda^M");
            return;
        }
        const auto a = classify_nodes(in.lambda, in.p, o.orientation);
        const auto b = classify_nodes(*dual, in.p, o.orientation);
        for (int i = 0; i < in.p.value(); ++i) {
            const int neg = in.p.negate(i);
            const std::string where = in.where() + " i=" + std::to_string(i);
            if (a.epsilon(i) != b.epsilon(neg) || a.phi(i) != b.phi(neg))
                rec.fail(in.order(), where,
                         "eps,phi(lambda)=" + std::to_string(a.epsilon(i)) +
                             "," + std::to_string(a.phi(i)),
                         "eps,phi_{-i}(lambda^M)=" +
                             std::to_string(b.epsilon(neg)) + "," +
                             std::to_string(b.phi(neg)));
            if (a.epsilon(i) == 0)
                continue;
            const auto child = tilde_e(in.lambda, i, in.p, o.orientation);
            const auto lhs = child && is_p_regular(*child, in.p)
                                 ? safe_mullineux(*child, in.p, o.orientation)
                                 : std::nullopt;
            const auto rhs = is_p_regular(*dual, in.p)
                                 ? tilde_e(*dual, neg, in.p, o.orientation)
                                 : std::nullopt;
            if (!lhs || lhs != rhs)
                rec.fail(in.order(), where, "M(e_i lambda)=" + fmt(lhs),
                         "e_{-i}(lambda^M)=" + fmt(rhs));
        }
    });
}

// Mullineux-fixed JS partitions over the sweep, via the calibrated tests.
template <class F>
void sweep_fixed_js(const Sweep &sweep, const RunOptions &o, F &&visit) {
    sweep_partitions(sweep, o, true, [&](const Instance &in) {
        if (in.lambda.empty() || !is_js_arith(in.lambda, in.p))
            return;
        const auto dual = safe_mullineux(in.lambda, in.p, o.orientation);
        if (dual && *dual == in.lambda)
            visit(in);
    });
}

void check_l23(const LemmaCheck &c, const RunOptions &o, Recorder &rec) {
    sweep_fixed_js(c.sweep, o, [&](const Instance &in) {
        rec.count();
        const int h = in.lambda.height();
        const int p = in.p.value();
        if ((in.n - h * h) % p != 0)
            rec.fail(in.order(), in.where(),
                     "n mod p=" + std::to_string(in.n % p),
                     "h^2 mod p=" + std::to_string(h * h % p));
        if (p == 5 && in.n >= 5 && h < 4)
            rec.fail(in.order(), in.where(), "h=" + std::to_string(h),
                     "h>=4");
    });
}

void check_l29(const LemmaCheck &c, const RunOptions &o, Recorder &rec) {
    const Orientation ori = o.orientation;
    sweep_fixed_js(c.sweep, o, [&](const Instance &in) {
        if (in.p.value() != 5 || in.n < 5)
            return;
        rec.count();
        const Prime p = in.p;
        const auto eps = classify_nodes(in.lambda, p, ori).epsilons();
        if (eps != std::vector<int>{1, 0, 0, 0, 0}) {
            rec.fail(in.order(), in.where(), "eps=" + fmt(eps), "[1,0,0,0,0]");
            return;
        }
        const auto mu = tilde_e(in.lambda, 0, p, ori);
        if (!mu || !is_p_regular(*mu, p)) {
            rec.fail(in.order(), in.where(), "e_0 = " + fmt(mu), "p-regular");
            return;
        }
        const auto mu_eps = classify_nodes(*mu, p, ori).epsilons();
        if (mu_eps != std::vector<int>{0, 1, 0, 0, 1}) {
            rec.fail(in.order(), in.where(), "eps(e_0)=" + fmt(mu_eps),
                     "[0,1,0,0,1]");
            return;
        }
        // Some i in {1, 4} must satisfy the second-layer conditions.
        std::vector<int> good;
        std::string last_observed;
        for (int i : {1, 4}) {
            const int neg = p.negate(i);
            const int twice = (2 * i) % 5;
            const auto nu = tilde_e(*mu, i, p, ori);
            if (!nu || !is_p_regular(*nu, p)) {
                last_observed = "e_" + std::to_string(i) + "e_0 = " + fmt(nu);
                continue;
            }
            std::vector<int> want(5, 0);
            want[neg] = 1;
            want[twice] = 1;
            const auto nu_eps = classify_nodes(*nu, p, ori).epsilons();
            const auto other = tilde_e(*mu, neg, p, ori);
            const auto left = tilde_e(*nu, neg, p, ori);
            const auto right = other && is_p_regular(*other, p)
                                   ? tilde_e(*other, i, p, ori)
                                   : std::nullopt;
            if (nu_eps == want && left && left == right) {
                good.push_back(i);
            } else {
                last_observed = "i=" + std::to_string(i) + " eps=" +
                                fmt(nu_eps) + " commute " + fmt(left) +
                                " vs " + fmt(right);
            }
        }
        if (good.empty())
            rec.fail(in.order(), in.where(), last_observed,
                     "i in {1,4} with eps support {-i,2i} and commuting "
                     "e_{-i}e_i e_0 = e_i e_{-i} e_0");
        for (int i : good)
            rec.observe("i=" + std::to_string(i));
    });
}

void check_l18(const LemmaCheck &c, const RunOptions &o, Recorder &rec) {
    sweep_partitions(c.sweep, o, true, [&](const Instance &in) {
        if (in.lambda.empty())
            return;
        const auto dual = safe_mullineux(in.lambda, in.p, o.orientation);
        if (!dual || *dual != in.lambda)
            return;
        const auto eps = classify_nodes(in.lambda, in.p, o.orientation).epsilons();
        std::vector<int> support;
        int total = 0;
        for (int i = 0; i < in.p.value(); ++i) {
            total += eps[i];
            if (eps[i] > 0)
                support.push_back(i);
        }
        if (total != 2 || support.size() != 2)
            return;
        rec.count();
        for (int i : support) {
            const auto child = tilde_e(in.lambda, i, in.p, o.orientation);
            if (child && !child->empty() && is_p_regular(*child, in.p) &&
                is_js(*child, in.p, o.orientation))
                rec.fail(in.order(), in.where() + " i=" + std::to_string(i),
                         "e_i = " + fmt(child) + " is JS", "not JS");
        }
    });
}

void check_l20a(const LemmaCheck &c, const RunOptions &o, Recorder &rec) {
    sweep_partitions(c.sweep, o, true, [&](const Instance &in) {
        const auto eps = classify_nodes(in.lambda, in.p, o.orientation).epsilons();
        int total = 0;
        int support = 0;
        for (int e : eps) {
            total += e;
            support += e > 0;
        }
        if (total < 3)
            return;
        rec.count();
        int s = 0;
        for (int e : eps)
            s += e * (e - 3 + support);
        const auto dual = safe_mullineux(in.lambda, in.p, o.orientation);
        const bool fixed = dual && *dual == in.lambda;
        const int need = fixed ? 3 : 2;
        if (s < need)
            rec.fail(in.order(), in.where(), "S=" + std::to_string(s),
                     "S>=" + std::to_string(need));
    });
}

void check_jseq(const LemmaCheck &c, const RunOptions &o, Recorder &rec) {
    sweep_partitions(c.sweep, o, true, [&](const Instance &in) {
        if (in.lambda.empty())
            return;
        rec.count();
        const bool arith = is_js_arith(in.lambda, in.p);
        const bool sig = is_js(in.lambda, in.p, o.orientation);
        if (arith != sig)
            rec.fail(in.order(), in.where(),
                     std::string("signature says ") + (sig ? "JS" : "not JS"),
                     std::string("congruence says ") + (arith ? "JS" : "not JS"));
    });
}

void check_mullx(const LemmaCheck &c, const RunOptions &o, Recorder &rec) {
    sweep_partitions(c.sweep, o, true, [&](const Instance &in) {
        rec.count();
        const auto rec_image = safe_mullineux(in.lambda, in.p, o.orientation);
        std::optional<Partition> sym_image;
        try {
            sym_image = mullineux_via_symbol(in.lambda, in.p);
        } catch (const Error &e) {
            rec.fail(in.order(), in.where(), e.what(), "symbol reconstruction");
            return;
        }
        if (rec_image != sym_image) {
            rec.fail(in.order(), in.where(), "recursion " + fmt(rec_image),
                     "symbol " + fmt(sym_image));
            return;
        }
        const Partition &image = *rec_image;
        if (image.size() != in.lambda.size() || !is_p_regular(image, in.p))
            rec.fail(in.order(), in.where(), fmt(image),
                     "p-regular of the same size");
        const auto back = safe_mullineux(image, in.p, o.orientation);
        if (back != in.lambda)
            rec.fail(in.order(), in.where(), "M(M(lambda))=" + fmt(back),
                     fmt(in.lambda));
        if (in.p.value() > in.n && image != conjugate(in.lambda))
            rec.fail(in.order(), in.where(), fmt(image),
                     "conjugate " + fmt(conjugate(in.lambda)));
    });
}

void check_nuwf(const LemmaCheck &c, const RunOptions &o, Recorder &rec) {
    sweep_fixed_js(c.sweep, o, [&](const Instance &in) {
        const int p = in.p.value();
        if (in.n < 5)
            return;
        const bool ordered = in.lambda.height() < 2 ||
                             in.lambda.row(1) > in.lambda.row(2);
        if (in.n % p == 0) {
            // Never reaches the classification; tally the shape only.
            if (!ordered)
                rec.observe("n=0 mod p with lambda_1=lambda_2");
            return;
        }
        rec.count();
        if (!ordered) {
            rec.fail(in.order(), in.where(), "lambda_1 = lambda_2",
                     "lambda_1 > lambda_2");
            return;
        }
        const Partition nu = nu_of(in.lambda);
        if (!is_p_regular(nu, in.p)) {
            rec.fail(in.order(), in.where(), "nu=" + fmt(nu), "p-regular");
            return;
        }
        const auto nu_dual = safe_mullineux(nu, in.p, o.orientation);
        if (!nu_dual || *nu_dual == nu)
            rec.fail(in.order(), in.where(),
                     "nu=" + fmt(nu) + " nu^M=" + fmt(nu_dual), "nu != nu^M");
    });
}

void check_closed(const LemmaCheck &c, const RunOptions &o, Recorder &rec) {
    const Sweep &s = c.sweep;
    for (std::size_t pi = 0; pi < s.primes.size(); ++pi) {
        const Prime p(s.primes[pi]);
        for (int n = std::max(s.n_min, 1); n <= s.n_max; ++n) {
            if (!in_shard(n, o))
                continue;
            rec.count();
            const Partition row{n};
            const auto got = safe_mullineux(row, p, o.orientation);
            const Partition want = closed_form_row(n, p);
            if (got != want)
                rec.fail({static_cast<std::int64_t>(pi), n, 0},
                         "p=" + std::to_string(p.value()) + " " + fmt(row),
                         fmt(got), fmt(want));
            if (p.value() != 5)
                continue;
            for (int i = 1; i <= 4; ++i) {
                if (2 * i > n || n < kTwoRowClosedFormMinN)
                    continue;
                rec.count();
                const Partition two{n - i, i};
                const auto image = safe_mullineux(two, p, o.orientation);
                const Partition expect = closed_form_two_row(n, i);
                if (image != expect)
                    rec.fail({static_cast<std::int64_t>(pi), n, i},
                             "p=5 " + fmt(two), fmt(image), fmt(expect));
            }
        }
    }
}

const std::vector<std::pair<LemmaId, const char *>> &names() {
    static const std::vector<std::pair<LemmaId, const char *>> table = {
        {LemmaId::MULLX, "MULLX"}, {LemmaId::CLOSED, "CLOSED"},
        {LemmaId::L52, "L52"},     {LemmaId::L47, "L47"},
        {LemmaId::L12, "L12"},     {LemmaId::L17, "L17"},
        {LemmaId::L23, "L23"},     {LemmaId::L29, "L29"},
        {LemmaId::L18, "L18"},     {LemmaId::L20A, "L20A"},
        {LemmaId::JSEQ, "JSEQ"},   {LemmaId::NUWF, "NUWF"},
    };
    return table;
}

} // namespace

const char *to_string(LemmaId id) {
    for (const auto &[key, name] : names())
        if (key == id)
            return name;
    return "?";
}

std::optional<LemmaId> lemma_from_string(std::string_view name) {
    for (const auto &[key, text] : names())
        if (name == text)
            return key;
    return std::nullopt;
}

const std::vector<LemmaId> &all_lemma_ids() {
    static const std::vector<LemmaId> ids = [] {
        std::vector<LemmaId> out;
        for (const auto &entry : names())
            out.push_back(entry.first);
        return out;
    }();
    return ids;
}

LemmaCheck default_check(LemmaId id) {
    switch (id) {
    case LemmaId::L52:
        return {id, {1, 18, {3, 5, 7}}, "sum phi = sum eps + 1 for every partition"};
    case LemmaId::L47:
        return {id, {1, 14, {5}},
                "f_i(e_i(lambda)) = lambda; eps_i drops and phi_i rises by one"};
    case LemmaId::L12:
        return {id, {1, 12, {3, 5, 7}},
                "removing a j-node keeps normal i-nodes normal and conormal "
                "i-nodes conormal (i != j)"};
    case LemmaId::L17:
        return {id, {1, 16, {3, 5}},
                "eps_i(lambda) = eps_{-i}(lambda^M), phi likewise, "
                "M(e_i lambda) = e_{-i}(lambda^M)"};
    case LemmaId::L23:
        return {id, {1, 30, {3, 5, 7}},
                "Mullineux-fixed JS: n = h^2 mod p; at p = 5, h >= 4 for n >= 5"};
    case LemmaId::L29:
        return {id, {5, 30, {5}},
                "p = 5 fixed JS: normal residue 0, e_0 layer support {i,-i}, "
                "second layer support {-i,2i}, e_{-i}e_i e_0 = e_i e_{-i} e_0"};
    case LemmaId::L18:
        return {id, {4, 16, {3, 5, 7}},
                "fixed lambda with two normal nodes of distinct residues: "
                "neither e_i child is JS"};
    case LemmaId::L20A:
        return {id, {1, 16, {5}},
                "sum eps >= 3: sum_i eps_i(eps_i - 3 + m) >= 2, >= 3 if fixed"};
    case LemmaId::JSEQ:
        return {id, {1, 20, {3, 5, 7}},
                "signature JS test agrees with the block congruence"};
    case LemmaId::MULLX:
        return {id, {1, 18, {3, 5, 7}},
                "recursion = symbol oracle, involution, size, conjugation for p > n"};
    case LemmaId::NUWF:
        return {id, {5, 30, {5}},
                "p = 5 fixed JS, n != 0 mod 5: nu is a 5-regular non-fixed "
                "partition"};
    case LemmaId::CLOSED:
        return {id, {1, 30, {3, 5, 7}},
                "(n)^M and, at p = 5 for n >= 12, (n-i,i)^M closed forms"};
    }
    throw Error(ErrorCode::InternalInconsistency, "unknown lemma id");
}

std::vector<LemmaCheck> default_checks() {
    std::vector<LemmaCheck> out;
    for (LemmaId id : all_lemma_ids())
        out.push_back(default_check(id));
    return out;
}

LemmaReport run_check(const LemmaCheck &check, const RunOptions &options) {
    if (check.sweep.n_max > options.ceiling)
        throw Error(ErrorCode::SweepTooLarge,
                    std::string(to_string(check.id)) + " sweep to n=" +
                        std::to_string(check.sweep.n_max) +
                        " exceeds the ceiling " +
                        std::to_string(options.ceiling));
    if (options.shard_count < 1 || options.shard_index < 0 ||
        options.shard_index >= options.shard_count)
        throw Error(ErrorCode::MalformedPartition, "bad shard specification");
    for (int p : check.sweep.primes)
        Prime{p};

    LemmaReport report;
    report.id = check.id;
    report.sweep = check.sweep;
    Recorder rec(report, options);
    const auto start = Clock::now();
    switch (check.id) {
    case LemmaId::L52: check_l52(check, options, rec); break;
    case LemmaId::L47: check_l47(check, options, rec); break;
    case LemmaId::L12: check_l12(check, options, rec); break;
    case LemmaId::L17: check_l17(check, options, rec); break;
    case LemmaId::L23: check_l23(check, options, rec); break;
    case LemmaId::L29: check_l29(check, options, rec); break;
    case LemmaId::L18: check_l18(check, options, rec); break;
    case LemmaId::L20A: check_l20a(check, options, rec); break;
    case LemmaId::JSEQ: check_jseq(check, options, rec); break;
    case LemmaId::MULLX: check_mullx(check, options, rec); break;
    case LemmaId::NUWF: check_nuwf(check, options, rec); break;
    case LemmaId::CLOSED: check_closed(check, options, rec); break;
    }
    report.elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
        Clock::now() - start);
    return report;
}

LemmaReport merge_reports(const LemmaReport &a, const LemmaReport &b,
                          std::size_t cap) {
    if (a.id != b.id || a.sweep != b.sweep)
        throw Error(ErrorCode::InternalInconsistency,
                    "cannot merge reports of different checks");
    LemmaReport out = a;
    out.instances += b.instances;
    out.elapsed += b.elapsed;
    for (const auto &[key, count] : b.observations)
        out.observations[key] += count;
    out.counterexamples.insert(out.counterexamples.end(),
                               b.counterexamples.begin(),
                               b.counterexamples.end());
    std::stable_sort(out.counterexamples.begin(), out.counterexamples.end(),
                     [](const Counterexample &x, const Counterexample &y) {
                         return x.order < y.order;
                     });
    out.truncated = a.truncated + b.truncated;
    if (out.counterexamples.size() > cap) {
        out.truncated += static_cast<std::int64_t>(out.counterexamples.size() - cap);
        out.counterexamples.resize(cap);
    }
    return out;
}

RunResult run_all(const RunConfig &config) {
    auto checks = default_checks();
    if (config.n_max)
        for (auto &check : checks)
            check.sweep.n_max = *config.n_max;
    // Reject bad configurations before any work starts.
    for (const auto &check : checks)
        if (check.sweep.n_max > config.options.ceiling)
            throw Error(ErrorCode::SweepTooLarge,
                        "--max-n " + std::to_string(check.sweep.n_max) +
                            " exceeds the ceiling " +
                            std::to_string(config.options.ceiling));

    RunResult result;
    auto run_batch = [&](std::vector<LemmaCheck> batch) {
        std::vector<LemmaReport> out;
        if (!config.parallel) {
            for (const auto &check : batch)
                out.push_back(run_check(check, config.options));
            return out;
        }
        std::vector<std::future<LemmaReport>> futures;
        for (const auto &check : batch)
            futures.push_back(std::async(std::launch::async, [&, check] {
                return run_check(check, config.options);
            }));
        for (auto &f : futures)
            out.push_back(f.get());
        return out;
    };

    std::vector<LemmaCheck> calibration;
    std::vector<LemmaCheck> rest;
    for (const auto &check : checks)
        (check.id == LemmaId::MULLX || check.id == LemmaId::CLOSED ? calibration
                                                                   : rest)
            .push_back(check);

    result.reports = run_batch(calibration);
    const bool calibrated = std::all_of(result.reports.begin(), result.reports.end(),
                                        [](const LemmaReport &r) { return r.pass(); });
    if (!calibrated) {
        result.calibration_aborted = true;
        result.exit_status = 1;
        return result;
    }
    for (auto &report : run_batch(rest))
        result.reports.push_back(std::move(report));
    result.exit_status =
        std::all_of(result.reports.begin(), result.reports.end(),
                    [](const LemmaReport &r) { return r.pass(); })
            ? 0
            : 1;
    return result;
}

nlohmann::ordered_json to_json(const LemmaReport &report, bool with_elapsed) {
    nlohmann::ordered_json j;
    j["id"] = to_string(report.id);
    j["n_min"] = report.sweep.n_min;
    j["n_max"] = report.sweep.n_max;
    j["primes"] = report.sweep.primes;
    j["instances"] = report.instances;
    auto list = nlohmann::ordered_json::array();
    for (const auto &c : report.counterexamples)
        list.push_back({{"input", c.input},
                        {"observed", c.observed},
                        {"expected", c.expected},
                        {"order", c.order}});
    j["counterexamples"] = list;
    j["truncated"] = report.truncated;
    j["observations"] = report.observations;
    j["pass"] = report.pass();
    if (with_elapsed)
        j["elapsed_ms"] = report.elapsed.count();
    return j;
}

LemmaReport report_from_json(const nlohmann::ordered_json &j) {
    LemmaReport report;
    const auto id = lemma_from_string(j.at("id").get<std::string>());
    if (!id)
        throw Error(ErrorCode::MalformedPartition,
                    "unknown lemma id " + j.at("id").get<std::string>());
    report.id = *id;
    report.sweep.n_min = j.at("n_min").get<int>();
    report.sweep.n_max = j.at("n_max").get<int>();
    report.sweep.primes = j.at("primes").get<std::vector<int>>();
    report.instances = j.at("instances").get<std::int64_t>();
    for (const auto &c : j.at("counterexamples")) {
        Counterexample ce;
        ce.input = c.at("input").get<std::string>();
        ce.observed = c.at("observed").get<std::string>();
        ce.expected = c.at("expected").get<std::string>();
        if (c.contains("order"))
            ce.order = c.at("order").get<std::array<std::int64_t, 3>>();
        report.counterexamples.push_back(std::move(ce));
    }
    report.truncated = j.value("truncated", std::int64_t{0});
    report.observations =
        j.value("observations", std::map<std::string, std::int64_t>{});
    report.elapsed = std::chrono::milliseconds(j.value("elapsed_ms", std::int64_t{0}));
    return report;
}

std::string to_jsonl(const std::vector<LemmaReport> &reports, bool with_elapsed) {
    std::string out;
    for (const auto &report : reports)
        out += to_json(report, with_elapsed).dump() + "\n";
    return out;
}

Partition closed_form_row(int n, Prime p) {
    const int q = p.value() - 1;
    const int a = n / q;
    const int b = n % q;
    std::vector<int> parts;
    parts.insert(parts.end(), b, a + 1);
    if (a > 0)
        parts.insert(parts.end(), q - b, a);
    return Partition(std::move(parts));
}

Partition closed_form_two_row(int n, int i) {
    const int a = (n - i) / 4;
    const int b = (n - i) % 4;
    std::vector<int> parts;
    parts.insert(parts.end(), b, a + 1);
    if (a > 0)
        parts.insert(parts.end(), 4 - b, a);
    parts.insert(parts.end(), i, 1);
    return Partition(std::move(parts));
}

CalibrationReport calibrate(int n_max) {
    CalibrationReport report;
    for (Orientation o : {Orientation::BottomUp, Orientation::TopDown}) {
        RunOptions options;
        options.orientation = o;
        LemmaCheck mullx = default_check(LemmaId::MULLX);
        LemmaCheck closed = default_check(LemmaId::CLOSED);
        mullx.sweep.n_max = n_max;
        closed.sweep.n_max = n_max;
        const auto m = run_check(mullx, options);
        const auto c = run_check(closed, options);
        report.trials.push_back({o, static_cast<std::int64_t>(m.counterexamples.size()) + m.truncated,
                                 static_cast<std::int64_t>(c.counterexamples.size()) + c.truncated});
    }
    int passing = 0;
    for (const auto &t : report.trials)
        if (t.pass()) {
            ++passing;
            report.selected = t.orientation;
        }
    if (passing != 1)
        report.selected.reset();
    return report;
}

} // namespace modrep::verify
