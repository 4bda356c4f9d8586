#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <vector>

#include <string>

namespace schub {

/// Ground-truth multiplicity classes for one group size. For n=5 the class
/// lists are complete; for n=6 the multiplicity-1 and -2 classes are known
/// only by their sizes (366 and key 2 -> 207), with the word lists for
/// multiplicity >= 3 complete.
struct ExpectedTable {
  int n = 0;
  bool complete = false;
  std::map<long long, std::vector<std::string>> classes;       // sorted word lists
  std::map<long long, std::size_t> aggregate_counts;           // counts without lists
};

namespace detail {

inline ExpectedTable build_n5() {
  ExpectedTable t;
  t.n = 5;
  t.complete = true;
  t.classes[5] = {"14325"};
  t.classes[3] = {"13425", "14235", "24153", "31524"};
  t.classes[2] = {"12435", "13245", "13254", "13524", "14253", "14352", "15324", "21354",
                  "21435", "21453", "21534", "21543", "23154", "24135", "24315", "24351",
                  "25143", "31254", "31425", "31542", "32154", "32514", "32541", "41325",
                  "42153", "51324", "52143"};
  t.classes[1] = {"12345", "12354", "12453", "12534", "12543", "13452", "13542", "14523",
                  "14532", "15234", "15243", "15342", "15423", "15432", "21345", "23145",
                  "23415", "23451", "23514", "23541", "24513", "24531", "25134", "25314",
                  "25341", "25413", "25431", "31245", "31452", "32145", "32415", "32451",
                  "34125", "34152", "34215", "34251", "34512", "34521", "35124", "35142",
                  "35214", "35241", "35412", "35421", "41235", "41253", "41352", "41523",
                  "41532", "42135", "42315", "42351", "42513", "42531", "43125", "43152",
                  "43215", "43251", "43512", "43521", "45123", "45132", "45213", "45231",
                  "45312", "45321", "51234", "51243", "51342", "51423", "51432", "52134",
                  "52314", "52341", "52413", "52431", "53124", "53142", "53214", "53241",
                  "53412", "53421", "54123", "54132", "54213", "54231", "54312", "54321"};
  for (auto& [m, words] : t.classes) std::sort(words.begin(), words.end());
  return t;
}

inline ExpectedTable build_n6() {
  ExpectedTable t;
  t.n = 6;
  t.complete = false;
  t.classes[14] = {"154326"};
  t.classes[10] = {"153426"};
  t.classes[9] = {"145326", "154236"};
  t.classes[8] = {"321654"};
  t.classes[7] = {"135426", "143526", "152436", "153246", "254163", "416325"};
  t.classes[6] = {"145236", "132546", "214365"};
  t.classes[5] = {"125436", "135246", "142536", "143256", "143265", "143625", "146325",
                  "153264", "154263", "154362", "164325", "215436", "251364", "251436",
                  "251463", "253164", "254136", "254316", "254361", "314625", "315426",
                  "316425", "413625", "415326", "426153", "514326", "614325"};
  t.classes[4] = {"153624", "152346", "134526", "214635", "215364", "215463", "216435",
                  "231564", "231654", "241365", "243165", "245163", "312645", "312654",
                  "314265", "321564", "321645", "326154", "351426", "351624", "413265",
                  "416235", "421653"};
  t.classes[3] = {"124356", "124365", "124536", "125346", "132564", "132645", "132654",
                  "134256", "134265", "134625", "135264", "136425", "142356", "142365",
                  "142635", "145263", "145362", "146235", "152364", "152463", "153462",
                  "163425", "164235", "214356", "214536", "215346", "216453", "216543",
                  "231546", "235164", "241536", "241563", "241635", "241653", "245136",
                  "245316", "245361", "246153", "251346", "251634", "251643", "253146",
                  "253416", "253461", "264153", "312546", "314526", "315246", "315264",
                  "315624", "316245", "316254", "316524", "321546", "325164", "341625",
                  "351264", "351642", "352164", "352614", "352641", "361524", "425163",
                  "412635", "413526", "415236", "416253", "416352", "421635", "423165",
                  "426135", "426315", "426351", "431625", "432165", "513426", "514236",
                  "524163", "531624", "613425", "614235", "624153", "631524"};
  t.aggregate_counts[1] = 366;
  t.aggregate_counts[2] = 207;
  for (auto& [m, words] : t.classes) std::sort(words.begin(), words.end());
  return t;
}

}  // namespace detail

/// Reference table for n, or nullptr when none is known.
inline const ExpectedTable* expected_table(int n) {
  static const ExpectedTable n5 = detail::build_n5();
  static const ExpectedTable n6 = detail::build_n6();
  if (n == 5) return &n5;
  if (n == 6) return &n6;
  return nullptr;
}

}  // namespace schub
