// Temporary development smoke driver; replaced by the real suites.
#include <cstdio>
#include <string>
#include <vector>

#include "moldebate/smiles.hpp"
#include "moldebate/errors.hpp"

using namespace moldebate;

int main() {
  struct Case { const char* smi; bool valid; };
  std::vector<Case> cases = {
      {"CCO", true},
      {"c1ccccc1", true},
      {"C1CC", false},
      {"C(C)(C)(C)(C)C", false},
      {"COC(=O)/C=C/[C@H]1CC[C@H]2[C@@H]3CCC4=CC(=O)CC[C@]4(C)[C@H]3C(=O)C[C@]12C", true},
      {"C1=CC=CC=C1", true},
      {"Cc1ccccc1", true},
      {"c1ccc2ccccc2c1", true},
      {"[nH]1cccc1", true},
      {"n1ccccc1", true},
      {"c1cccc1", false},
      {"N(C)(C)(C)C", false},
      {"F/C=C/F", true},
      {"F/C=C\\F", true},
      {"[13CH4]", true},
      {"[Na+].[Cl-]", true},
      {"C%10CC%10", true},
      {"C1CC=1", true},
      {"C=1CC#1", false},
      {"C12CC12", false},
      {"C11", false},
      {"C()C", false},
      {"C..C", false},
      {"[Zz]", false},
      {"O=[n+]1ccccc1", false},
      {"[O-][n+]1ccccc1", true},
      {"CN1C=NC2=C1C(=O)N(C)C(=O)N2C", true},
      {"Cn1cnc2c1c(=O)n(C)c(=O)n2C", true},
  };
  int failures = 0;
  for (const auto& c : cases) {
    auto out = try_parse_smiles(c.smi);
    bool ok = static_cast<bool>(out);
    if (ok != c.valid) {
      ++failures;
      std::printf("MISMATCH %-50s expected %s got %s (%s)\n", c.smi,
                  c.valid ? "valid" : "invalid", ok ? "valid" : "invalid",
                  out.error.c_str());
      continue;
    }
    if (ok) {
      std::string canon = canonical_smiles(*out.mol);
      auto re = try_parse_smiles(canon);
      if (!re) {
        ++failures;
        std::printf("REPARSE-FAIL %-40s canon=%s err=%s\n", c.smi,
                    canon.c_str(), re.error.c_str());
        continue;
      }
      std::string canon2 = canonical_smiles(*re.mol);
      if (canon != canon2) {
        ++failures;
        std::printf("NOT-IDEMPOTENT %-40s %s vs %s\n", c.smi, canon.c_str(),
                    canon2.c_str());
        continue;
      }
      std::printf("ok  %-50s -> %s\n", c.smi, canon.c_str());
    } else {
      std::printf("ok  %-50s rejected: %s\n", c.smi, out.error.c_str());
    }
  }
  std::printf("%d failures\n", failures);
  return failures == 0 ? 0 : 1;
}
