#include "catalog_data.hpp"

namespace commgraph::detail
{

// Generated by tools/make_catalog_generators.py; do not edit by hand.
std::vector<FixedGroupData> const &fixed_group_data()
{
  static std::vector<FixedGroupData> const data{
    {"psl2(9)", 10, 360,
     {
         "(1,2,3)(4,5,6)(7,8,9)",
         "(2,7,3,4)(5,8,9,6)",
         "(1,10)(2,3)(5,8)(6,9)",
     }},
    {"pgl2(9)", 10, 720,
     {
         "(1,2,3)(4,5,6)(7,8,9)",
         "(2,5,7,8,3,9,4,6)",
         "(1,10)(2,3)(5,8)(6,9)",
     }},
    {"m10", 10, 720,
     {
         "(1,2,3)(4,5,6)(7,8,9)",
         "(2,7,3,4)(5,8,9,6)",
         "(1,10)(2,3)(5,8)(6,9)",
         "(2,5,3,9)(4,8,7,6)",
     }},
    {"psigmal2(9)", 10, 720,
     {
         "(1,2,3)(4,5,6)(7,8,9)",
         "(2,7,3,4)(5,8,9,6)",
         "(1,10)(2,3)(5,8)(6,9)",
         "(4,7)(5,8)(6,9)",
     }},
    {"aut(alt(6))", 10, 1440,
     {
         "(1,2,3)(4,5,6)(7,8,9)",
         "(2,5,7,8,3,9,4,6)",
         "(1,10)(2,3)(5,8)(6,9)",
         "(4,7)(5,8)(6,9)",
     }},
    {"psl2(8)", 9, 504,
     {
         "(1,2)(3,4)(5,6)(7,8)",
         "(2,3,5,4,7,8,6)",
         "(1,9)(3,6)(4,7)(5,8)",
     }},
    {"psl3(4)", 21, 20160,
     {
         "(6,10)(7,11)(8,12)(9,13)(14,18)(15,19)(16,20)(17,21)",
         "(1,6,2)(3,7,10)(4,9,14)(5,8,18)(12,21,15)(13,16,19)",
         "(3,4,5)(7,9,8)(10,14,18)(11,17,20)(12,15,21)(13,16,19)",
     }},
    {"pgl3(4)", 21, 60480,
     {
         "(6,10)(7,11)(8,12)(9,13)(14,18)(15,19)(16,20)(17,21)",
         "(1,6,2)(3,7,10)(4,9,14)(5,8,18)(12,21,15)(13,16,19)",
         "(3,4,5)(7,9,8)(10,14,18)(11,17,20)(12,15,21)(13,16,19)",
         "(7,9,8)(10,18,14)(11,21,16)(12,19,17)(13,20,15)",
     }},
    {"sz(8)", 65, 29120,
     {
         "(2,10,3,11)(4,12,5,13)(6,14,7,15)(8,16,9,17)(18,28,19,29)(20,26,21,27)"
         "(22,32,23,33)(24,30,25,31)(34,46,35,47)(36,48,37,49)(38,42,39,43)(40,44,41,45)"
         "(50,64,51,65)(52,62,53,63)(54,60,55,61)(56,58,57,59)",
         "(2,3)(4,5)(6,7)(8,9)(10,11)(12,13)(14,15)(16,17)(18,19)(20,21)(22,23)(24,25)"
         "(26,27)(28,29)(30,31)(32,33)(34,35)(36,37)(38,39)(40,41)(42,43)(44,45)(46,47)"
         "(48,49)(50,51)(52,53)(54,55)(56,57)(58,59)(60,61)(62,63)(64,65)",
         "(3,9,5,4,7,8,6)(10,18,34,26,50,58,42)(11,25,37,28,55,64,46)"
         "(12,23,40,30,51,65,45)(13,20,39,32,54,59,49)(14,19,41,29,52,63,48)"
         "(15,24,38,27,57,61,44)(16,22,35,33,53,60,47)(17,21,36,31,56,62,43)",
         "(1,2)(3,10)(4,50)(5,58)(6,18)(7,26)(8,34)(9,42)(12,36)(13,52)(14,54)(15,22)"
         "(16,24)(17,40)(19,32)(20,29)(21,23)(25,46)(27,60)(28,55)(30,43)(31,45)(33,61)"
         "(35,44)(37,64)(38,47)(39,41)(48,59)(49,63)(51,62)(53,57)(56,65)",
     }},
    {"sz(8):3", 65, 87360,
     {
         "(2,10,3,11)(4,12,5,13)(6,14,7,15)(8,16,9,17)(18,28,19,29)(20,26,21,27)"
         "(22,32,23,33)(24,30,25,31)(34,46,35,47)(36,48,37,49)(38,42,39,43)(40,44,41,45)"
         "(50,64,51,65)(52,62,53,63)(54,60,55,61)(56,58,57,59)",
         "(2,3)(4,5)(6,7)(8,9)(10,11)(12,13)(14,15)(16,17)(18,19)(20,21)(22,23)(24,25)"
         "(26,27)(28,29)(30,31)(32,33)(34,35)(36,37)(38,39)(40,41)(42,43)(44,45)(46,47)"
         "(48,49)(50,51)(52,53)(54,55)(56,57)(58,59)(60,61)(62,63)(64,65)",
         "(3,9,5,4,7,8,6)(10,18,34,26,50,58,42)(11,25,37,28,55,64,46)"
         "(12,23,40,30,51,65,45)(13,20,39,32,54,59,49)(14,19,41,29,52,63,48)"
         "(15,24,38,27,57,61,44)(16,22,35,33,53,60,47)(17,21,36,31,56,62,43)",
         "(1,2)(3,10)(4,50)(5,58)(6,18)(7,26)(8,34)(9,42)(12,36)(13,52)(14,54)(15,22)"
         "(16,24)(17,40)(19,32)(20,29)(21,23)(25,46)(27,60)(28,55)(30,43)(31,45)(33,61)"
         "(35,44)(37,64)(38,47)(39,41)(48,59)(49,63)(51,62)(53,57)(56,65)",
         "(4,6,8)(5,7,9)(12,14,16)(13,15,17)(18,34,50)(19,35,51)(20,38,56)(21,39,57)"
         "(22,40,52)(23,41,53)(24,36,54)(25,37,55)(26,42,58)(27,43,59)(28,46,64)(29,47,65)"
         "(30,48,60)(31,49,61)(32,44,62)(33,45,63)",
     }},
    {"m11", 11, 7920,
     {
         "(1,2,3,4,5,6,7,8,9,10,11)",
         "(3,7,11,8)(4,10,5,6)",
     }},
    {"m12", 12, 95040,
     {
         "(1,2,3,4,5,6,7,8,9,10,11)",
         "(3,7,11,8)(4,10,5,6)",
         "(1,12)(2,11)(3,6)(4,8)(5,9)(7,10)",
     }},
  };
  return data;
}

} // namespace commgraph::detail
