// Benchmark of the parallel kernels against their serial reference paths.
// Usage: bench [bound]   (default 2; larger bounds grow the sweeps quickly)

#include <chrono>
#include <cstdlib>
#include <iostream>

#include "reprings/lambda.hpp"
#include "reprings/twisted.hpp"

using namespace reprings;

namespace {

template <typename F>
double seconds(F&& f) {
    auto start = std::chrono::steady_clock::now();
    f();
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

void report(const std::string& name, double serial, double parallel, bool identical) {
    std::cout << name << ": serial " << serial << " s, parallel " << parallel << " s, speedup "
              << (parallel > 0 ? serial / parallel : 0.0) << "x, results "
              << (identical ? "identical" : "DIFFER") << "\n";
}

} // namespace

int main(int argc, char** argv) {
    i64 bound = argc > 1 ? std::atoll(argv[1]) : 2;

    for (const std::string& type : {"A3", "C2"}) {
        RootDatum d = build_root_datum(type);
        std::vector<LambdaTableEntry> serial_table, parallel_table;
        double ts = seconds([&] { serial_table = lambda_table(d, bound, 3, 3, false); });
        double tp = seconds([&] { parallel_table = lambda_table(d, bound, 3, 3, true); });
        bool same = serial_table.size() == parallel_table.size();
        for (size_t i = 0; same && i < serial_table.size(); ++i)
            same = serial_table[i].op == parallel_table[i].op &&
                   serial_table[i].k == parallel_table[i].k &&
                   serial_table[i].input == parallel_table[i].input &&
                   serial_table[i].decomposition == parallel_table[i].decomposition;
        report("lambda_table " + type + " bound " + std::to_string(bound), ts, tp, same);
    }

    {
        PhiSemiringCheck serial_check, parallel_check;
        double ts = seconds(
            [&] { serial_check = check_phi_semiring(1, bound, PhiVariant::standard, false); });
        double tp = seconds(
            [&] { parallel_check = check_phi_semiring(1, bound, PhiVariant::standard, true); });
        bool same = serial_check.ok == parallel_check.ok &&
                    serial_check.pairs_checked == parallel_check.pairs_checked;
        report("check_phi_semiring n=1 bound " + std::to_string(bound), ts, tp, same);
    }
    return 0;
}
