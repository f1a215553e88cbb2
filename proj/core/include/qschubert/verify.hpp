#pragma once

#include <map>
#include <string>
#include <vector>

#include "qschubert/frames.hpp"
#include "qschubert/qmatrix.hpp"
#include "qschubert/twist.hpp"

namespace qs {

struct CheckCount {
    long instances = 0;
    long failures = 0;
};

struct SuiteResult {
    std::string name;
    std::map<std::string, CheckCount> checks;
    std::map<std::string, long> notes;  // informational counts, not pass/fail
    std::vector<std::string> samples;   // first few failure descriptions
    double seconds = 0;

    long failures() const;
    long instances() const;
    bool passed() const { return failures() == 0; }
    void record(const std::string& check, bool ok, const std::string& what = {});
    void merge(const SuiteResult& o);
};

struct SuiteBounds {
    int maxLength = 6;             // l(w) bound for the root-system sweeps
    int nonReducedLength = 4;      // all words up to this length in the identity sweep
    std::vector<std::pair<int, int>> shapes{{2, 2}, {2, 3}};  // exhaustive quantum-matrix shapes
    bool sampled3x3 = false;
    int samples = 50;
    unsigned long long seed = 20240607ULL;
    int torusTriples = 1000;
    int jobs = 1;
};

// (type, rank) pairs of the standard sweep: A3, B2, G2 with l(w) <= maxLength
// and all of A2
struct SweepType {
    char type;
    int rank;
    int maxLength;
};
std::vector<SweepType> standard_sweep(const SuiteBounds& b);

const std::vector<std::string>& suite_names();
// throws UnknownSuite
SuiteResult run_suite(const std::string& name, const SuiteBounds& b);

SuiteResult suite_subexpr_oracle(const SuiteBounds& b);
SuiteResult suite_deg_identities(const SuiteBounds& b);
SuiteResult suite_matrices(const SuiteBounds& b);
SuiteResult suite_frames(const SuiteBounds& b);
SuiteResult suite_twist(const SuiteBounds& b);
SuiteResult suite_qmatrix(const SuiteBounds& b);
SuiteResult suite_qtorus(const SuiteBounds& b);

}  // namespace qs
