#pragma once

#include "ncres/algebra.hpp"
#include "ncres/annihilators.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace ncres {

enum class CheckStatus { pass, fail, assumed };

struct Check {
    std::string name;
    CheckStatus status = CheckStatus::fail;
    std::string detail;
};

struct VerificationReport {
    std::string case_id;
    std::vector<Check> checks;
    std::vector<std::string> artifacts;

    void add(const std::string& name, bool ok, const std::string& detail = "");
    void add_assumed(const std::string& name, const std::string& detail = "");
    bool all_passed() const;  // ignores "assumed" entries
    std::string table() const;
    std::string json() const;
};

VerificationReport verify_cyclic(int r, int b, int socle,
                                 Execution exec = Execution::parallel);
VerificationReport verify_conifold();
VerificationReport verify_tautological(int n);
struct PreprojectiveCase {
    bool is_e6 = false;
    int n = 0;  // D(n+2)
    int socle = 0;
};
VerificationReport verify_preprojective(const PreprojectiveCase& c);
VerificationReport verify_su3(Execution exec = Execution::parallel);

} // namespace ncres
