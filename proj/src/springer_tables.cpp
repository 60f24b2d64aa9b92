// Built-in class and Springer-correspondence tables for the non-A types.
// Rows are stored in the cohomology normalization (regular class paired with
// the trivial character); weights follow the Bourbaki order of the simple
// roots as produced by type recognition. Source keys refer to Carter,
// "Finite Groups of Lie Type", section 13.3.
#include <map>

#include "extq/unipotent.hpp"

namespace extq {

namespace {

const char* kTableC2 = R"JSON({
  "version": 1,
  "type": "C2",
  "source": "Carter 13.3 (C2)",
  "classes": [
    {"name": "(1^4)",   "bala_carter": "0",   "weights": [0, 0], "A_x": "1",   "dim_Bx": 4},
    {"name": "(2,1^2)", "bala_carter": "A1",  "weights": [1, 0], "A_x": "Z/2", "dim_Bx": 2},
    {"name": "(2^2)",   "bala_carter": "A1~", "weights": [0, 2], "A_x": "Z/2", "dim_Bx": 1},
    {"name": "(4)",     "bala_carter": "C2",  "weights": [2, 2], "A_x": "Z/2", "dim_Bx": 0}
  ],
  "springer": [
    {"class": "(4)",     "rho1": "1",   "weyl_char": "(2|)"},
    {"class": "(2^2)",   "rho1": "1",   "weyl_char": "(1|1)"},
    {"class": "(2^2)",   "rho1": "eps", "weyl_char": "(|2)"},
    {"class": "(2,1^2)", "rho1": "1",   "weyl_char": "(1^2|)"},
    {"class": "(1^4)",   "rho1": "1",   "weyl_char": "(|1^2)"}
  ]
})JSON";

const char* kTableB2 = R"JSON({
  "version": 1,
  "type": "B2",
  "source": "Carter 13.3 (B2)",
  "classes": [
    {"name": "(1^5)",   "bala_carter": "0",   "weights": [0, 0], "A_x": "1",   "dim_Bx": 4},
    {"name": "(2^2,1)", "bala_carter": "A1",  "weights": [0, 1], "A_x": "Z/2", "dim_Bx": 2},
    {"name": "(3,1^2)", "bala_carter": "A1~", "weights": [2, 0], "A_x": "Z/2", "dim_Bx": 1},
    {"name": "(5)",     "bala_carter": "B2",  "weights": [2, 2], "A_x": "Z/2", "dim_Bx": 0}
  ],
  "springer": [
    {"class": "(5)",     "rho1": "1",   "weyl_char": "(2|)"},
    {"class": "(3,1^2)", "rho1": "1",   "weyl_char": "(1|1)"},
    {"class": "(3,1^2)", "rho1": "eps", "weyl_char": "(1^2|)"},
    {"class": "(2^2,1)", "rho1": "1",   "weyl_char": "(|2)"},
    {"class": "(1^5)",   "rho1": "1",   "weyl_char": "(|1^2)"}
  ]
})JSON";

const char* kTableC3 = R"JSON({
  "version": 1,
  "type": "C3",
  "source": "Carter 13.3 (C3)",
  "classes": [
    {"name": "(1^6)",     "bala_carter": "0",      "weights": [0, 0, 0], "A_x": "1",       "dim_Bx": 9},
    {"name": "(2,1^4)",   "bala_carter": "A1",     "weights": [1, 0, 0], "A_x": "Z/2",     "dim_Bx": 6},
    {"name": "(2^2,1^2)", "bala_carter": "A1~",    "weights": [0, 1, 0], "A_x": "Z/2",     "dim_Bx": 4},
    {"name": "(2^3)",     "bala_carter": "A1~+A1", "weights": [0, 0, 2], "A_x": "Z/2",     "dim_Bx": 3},
    {"name": "(3^2)",     "bala_carter": "A2",     "weights": [0, 2, 0], "A_x": "1",       "dim_Bx": 2},
    {"name": "(4,1^2)",   "bala_carter": "C2",     "weights": [2, 1, 0], "A_x": "Z/2",     "dim_Bx": 2},
    {"name": "(4,2)",     "bala_carter": "C3(a1)", "weights": [2, 0, 2], "A_x": "Z/2xZ/2", "dim_Bx": 1},
    {"name": "(6)",       "bala_carter": "C3",     "weights": [2, 2, 2], "A_x": "Z/2",     "dim_Bx": 0}
  ],
  "springer": [
    {"class": "(6)",       "rho1": "1",    "weyl_char": "(3|)"},
    {"class": "(4,2)",     "rho1": "1",    "weyl_char": "(2|1)"},
    {"class": "(4,2)",     "rho1": "eps1", "weyl_char": "(|3)"},
    {"class": "(4,1^2)",   "rho1": "1",    "weyl_char": "(2,1|)"},
    {"class": "(3^2)",     "rho1": "1",    "weyl_char": "(1|2)"},
    {"class": "(2^3)",     "rho1": "1",    "weyl_char": "(1^2|1)"},
    {"class": "(2^2,1^2)", "rho1": "1",    "weyl_char": "(1|1^2)"},
    {"class": "(2^2,1^2)", "rho1": "eps",  "weyl_char": "(|2,1)"},
    {"class": "(2,1^4)",   "rho1": "1",    "weyl_char": "(1^3|)"},
    {"class": "(1^6)",     "rho1": "1",    "weyl_char": "(|1^3)"}
  ]
})JSON";

const char* kTableB3 = R"JSON({
  "version": 1,
  "type": "B3",
  "source": "Carter 13.3 (B3)",
  "classes": [
    {"name": "(1^7)",     "bala_carter": "0",      "weights": [0, 0, 0], "A_x": "1",   "dim_Bx": 9},
    {"name": "(2^2,1^3)", "bala_carter": "A1",     "weights": [0, 1, 0], "A_x": "1",   "dim_Bx": 5},
    {"name": "(3,1^4)",   "bala_carter": "A1~",    "weights": [2, 0, 0], "A_x": "Z/2", "dim_Bx": 4},
    {"name": "(3,2^2)",   "bala_carter": "A1+A1~", "weights": [1, 0, 1], "A_x": "1",   "dim_Bx": 3},
    {"name": "(3^2,1)",   "bala_carter": "A2",     "weights": [0, 2, 0], "A_x": "Z/2", "dim_Bx": 2},
    {"name": "(5,1^2)",   "bala_carter": "B2",     "weights": [2, 2, 0], "A_x": "Z/2", "dim_Bx": 1},
    {"name": "(7)",       "bala_carter": "B3",     "weights": [2, 2, 2], "A_x": "1",   "dim_Bx": 0}
  ],
  "springer": [
    {"class": "(7)",       "rho1": "1",   "weyl_char": "(3|)"},
    {"class": "(5,1^2)",   "rho1": "1",   "weyl_char": "(2|1)"},
    {"class": "(5,1^2)",   "rho1": "eps", "weyl_char": "(2,1|)"},
    {"class": "(3^2,1)",   "rho1": "1",   "weyl_char": "(1|2)"},
    {"class": "(3^2,1)",   "rho1": "eps", "weyl_char": "(|3)"},
    {"class": "(3,2^2)",   "rho1": "1",   "weyl_char": "(1^2|1)"},
    {"class": "(3,1^4)",   "rho1": "1",   "weyl_char": "(1|1^2)"},
    {"class": "(3,1^4)",   "rho1": "eps", "weyl_char": "(1^3|)"},
    {"class": "(2^2,1^3)", "rho1": "1",   "weyl_char": "(|2,1)"},
    {"class": "(1^7)",     "rho1": "1",   "weyl_char": "(|1^3)"}
  ]
})JSON";

const char* kTableG2 = R"JSON({
  "version": 1,
  "type": "G2",
  "source": "Carter 13.3 (G2)",
  "classes": [
    {"name": "0",      "bala_carter": "0",      "weights": [0, 0], "A_x": "1",  "dim_Bx": 6},
    {"name": "A1",     "bala_carter": "A1",     "weights": [0, 1], "A_x": "1",  "dim_Bx": 3},
    {"name": "A1~",    "bala_carter": "A1~",    "weights": [1, 0], "A_x": "1",  "dim_Bx": 2},
    {"name": "G2(a1)", "bala_carter": "G2(a1)", "weights": [0, 2], "A_x": "S3", "dim_Bx": 1},
    {"name": "G2",     "bala_carter": "G2",     "weights": [2, 2], "A_x": "1",  "dim_Bx": 0}
  ],
  "springer": [
    {"class": "G2",     "rho1": "1",   "weyl_char": "triv"},
    {"class": "G2(a1)", "rho1": "1",   "weyl_char": "phi21"},
    {"class": "G2(a1)", "rho1": "std", "weyl_char": "eps_l"},
    {"class": "A1~",    "rho1": "1",   "weyl_char": "phi22"},
    {"class": "A1",     "rho1": "1",   "weyl_char": "eps_s"},
    {"class": "0",      "rho1": "1",   "weyl_char": "sign"}
  ]
})JSON";

}  // namespace

const std::map<std::string, std::string>& springer_table_sources() {
    static const std::map<std::string, std::string> tables = {
        {"B2", kTableB2}, {"C2", kTableC2}, {"B3", kTableB3}, {"C3", kTableC3}, {"G2", kTableG2}};
    return tables;
}

}  // namespace extq
