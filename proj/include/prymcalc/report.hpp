// One-shot verification report: recomputes every headline number of the
// genus-15 computation and diffs it against the expected-value table.
#pragma once

#include <string>
#include <vector>

namespace prymcalc {

struct ReportEntry {
    std::string name;
    std::string computed;
    std::string expected;
    bool match = false;
    std::string note;  // what the number is
};

struct PaperReport {
    std::vector<ReportEntry> entries;
    bool overall = false;
};

PaperReport run_paper_report();

}  // namespace prymcalc
