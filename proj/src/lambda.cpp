#include "reprings/lambda.hpp"

#include <stdexcept>

#include "reprings/parallel.hpp"

namespace reprings {

FormalCharacter adams(const FormalCharacter& x, i64 n) {
    if (n <= 0) throw std::invalid_argument("adams requires n >= 1");
    FormalCharacter r;
    r.datum = x.datum;
    for (auto& [w, m] : x.terms) {
        Weight v = w;
        for (auto& c : v) c *= n;
        r.add_term(v, m);
    }
    return r;
}

namespace {

using RatMap = std::map<Weight, Rat>;

RatMap to_rat(const FormalCharacter& x) {
    RatMap r;
    for (auto& [w, m] : x.terms) r.emplace(w, Rat(m));
    return r;
}

void add_scaled_product(RatMap& acc, const RatMap& a, const FormalCharacter& b, Rat c) {
    for (auto& [w1, m1] : a)
        for (auto& [w2, m2] : b.terms) {
            Weight w = w1;
            for (size_t i = 0; i < w.size(); ++i) w[i] += w2[i];
            Rat v = acc.count(w) ? acc[w] : Rat(0);
            v = v + m1 * Rat(m2) * c;
            if (v.num == 0) acc.erase(w);
            else acc[w] = v;
        }
}

} // namespace

FormalCharacter exterior_power(const FormalCharacter& x, i64 k) {
    if (k < 0) throw std::invalid_argument("exterior_power requires k >= 0");
    if (!x.datum && k > 0) throw std::invalid_argument("exterior_power of a datum-less character");
    std::vector<FormalCharacter> psi;
    psi.reserve(size_t(k) + 1);
    psi.push_back({}); // unused slot 0
    for (i64 i = 1; i <= k; ++i) psi.push_back(adams(x, i));

    std::vector<RatMap> lam(size_t(k) + 1);
    if (x.datum) lam[0].emplace(x.datum->zero_weight(), Rat(1));
    else lam[0].emplace(Weight{}, Rat(1));
    for (i64 j = 1; j <= k; ++j) {
        RatMap acc;
        for (i64 i = 1; i <= j; ++i)
            add_scaled_product(acc, lam[size_t(j - i)], psi[size_t(i)],
                               Rat(i % 2 == 1 ? 1 : -1, j));
        lam[size_t(j)] = std::move(acc);
    }

    FormalCharacter r;
    r.datum = x.datum;
    for (auto& [w, v] : lam[size_t(k)]) {
        if (!v.is_integer())
            throw std::logic_error("exterior power produced a non-integer multiplicity");
        r.add_term(w, v.as_integer());
    }
    return r;
}

std::vector<LambdaTableEntry> lambda_table(const RootDatum& datum, i64 bound, i64 k_max,
                                           i64 n_max, bool parallel) {
    if (bound < 0 || k_max < 0 || n_max < 0)
        throw std::invalid_argument("lambda_table bounds must be >= 0");
    const int n = datum.rank();
    std::vector<Weight> inputs;
    Weight w(n, 0);
    while (true) {
        inputs.push_back(w);
        int i = 0;
        while (i < n && w[i] == bound) w[i++] = 0;
        if (i == n) break;
        ++w[i];
    }
    std::sort(inputs.begin(), inputs.end());

    struct Job { std::string op; i64 k; Weight input; };
    std::vector<Job> jobs;
    for (auto& in : inputs) {
        for (i64 k = 0; k <= k_max; ++k) jobs.push_back({"lambda", k, in});
        for (i64 m = 1; m <= n_max; ++m) jobs.push_back({"psi", m, in});
    }

    const i64 budget = enumeration_budget();
    std::vector<LambdaTableEntry> out(jobs.size());
    parallel_for(int(jobs.size()), parallel, [&](int j) {
        const Job& job = jobs[size_t(j)];
        if (weyl_dimension(datum, job.input) > budget)
            throw std::runtime_error("enumeration budget exceeded at weight " +
                                     [&] {
                                         std::string s = "(";
                                         for (int i = 0; i < datum.rank(); ++i)
                                             s += (i ? "," : "") + std::to_string(job.input[i]);
                                         return s + ")";
                                     }());
        FormalCharacter base = irreducible_character(datum, job.input);
        FormalCharacter val =
            job.op == "lambda" ? exterior_power(base, job.k) : adams(base, job.k);
        out[size_t(j)] = {job.op, job.k, job.input, decompose(val)};
    });
    return out;
}

} // namespace reprings
