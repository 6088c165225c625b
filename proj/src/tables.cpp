// Copyright 2026 The irrmeasure Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "irm/tables.hpp"

namespace irm {

const std::vector<MeasureRow>& measure_table() {
  static const std::vector<MeasureRow> rows = {
      {2, "0.25", "1.4325"},
      {3, "0.37", "1.6974"},
      {4, "0.41", "1.4325"},
      {5, "0.29", "1.7567"},
      {6, "0.01", "1.3216"},
      {7, "0.08", "1.6717"},
      {9, "0.08", "1.6974"},
      {10, "0.15", "1.4157"},
      {11, "0.22", "1.8725"},
      {12, "0.28", "1.9099"},
      {13, "0.35", "1.8266"},
      {15, "0.19", "1.4964"},
      {17, "0.01", "1.1996"},
      {18, "0.37", "1.9099"},
      {19, "0.02", "1.2718"},
      {20, "0.009", "1.1961"},
      {22, "0.07", "1.2764"},
      {25, "0.07", "1.7567"},
      {26, "0.03", "1.4860"},
      {28, "0.03", "1.4813"},
      {30, "0.10", "1.6689"},
      {31, "0.14", "1.9288"},
      {36, "0.08", "1.3216"},
      {37, "0.01", "1.2472"},
      {39, "0.08", "1.1848"},
      {41, "0.41", "1.9956"},
      {42, "0.12", "1.4186"},
      {43, "0.01", "1.2890"},
      {44, "0.21", "1.8164"},
      {49, "0.13", "1.6717"},
      {50, "0.11", "1.1962"},
      {52, "0.26", "1.8901"},
      {57, "0.15", "1.9825"},
      {58, "0.12", "1.6526"},
      {60, "0.08", "1.5670"},
      {61, "0.06", "1.5193"},
      {62, "0.04", "1.4646"},
      {63, "0.02", "1.3943"},
      {65, "0.02", "1.3929"},
      {66, "0.04", "1.4610"},
      {67, "0.06", "1.5125"},
      {68, "0.08", "1.5562"},
      {70, "0.12", "1.6314"},
      {76, "0.08", "1.5154"},
      {78, "0.03", "1.5729"},
      {83, "0.09", "1.6898"},
      {84, "0.37", "1.8797"},
      {90, "0.09", "1.3751"},
      {91, "0.009", "1.2583"},
      {98, "0.38", "1.4813"},
      {100, "0.35", "1.4158"},
  };
  return rows;
}

const std::vector<EpsilonRow>& epsilon_table() {
  static const std::vector<EpsilonRow> rows = {
      {1, 0, {"0.00474", "0.00168", "0.000525", "0.0001491", "0.0000459", "0.0000186"}},
      {3, 1, {"0.00405", "0.00148", "0.000401", "0.0001260", "0.0000371", "0.0000351"}},
      {3, 2, {"0.00217", "0.00068", "0.000180", "0.0000428", "0.0000351", "0.0000351"}},
      {4, 1, {"0.00494", "0.00169", "0.000471", "0.0001268", "0.0000511", "0.0000511"}},
      {4, 3, {"0.00150", "0.00036", "0.000197", "0.0000511", "0.0000511", "0.0000511"}},
      {6, 1, {"0.00405", "0.00148", "0.000401", "0.0001260", "0.0000371", "0.0000351"}},
      {6, 5, {"0.00217", "0.00068", "0.000180", "0.0000428", "0.0000351", "0.0000351"}},
  };
  return rows;
}

ExactInt epsilon_x0(int column) { return ipow(ExactInt(10), 5 + column); }

std::optional<ExactRational> epsilon_for(int k, int l, const ExactRational& x) {
  for (const auto& row : epsilon_table()) {
    if (row.k != k || row.l != l) continue;
    std::optional<ExactRational> best;
    for (int j = 0; j < 6; ++j) {
      if (ExactRational(epsilon_x0(j)) > x) break;
      const ExactRational e = parse_rational(row.eps[j]);
      if (!best || e < *best) best = e;
    }
    return best;
  }
  throw DomainError("no epsilon row for this class");
}

const std::vector<QuotientRow>& quotient_table() {
  static const std::vector<QuotientRow> rows = {
      {2, "2*4^3", "5^3", 484708, 4156269},
      {3, "3^2", "2^3", 13628, 738358},
      {4, "2*4^3", "5^3", 485529, 8312539},
      {5, "239645788^3", "5*140145707^3", 266405, 3494436},
      {6, "467^3", "6*257^3", 238114, 466540},
      {7, "44^3", "7*23^3", 274789, 12013483},
      {9, "9", "2^3", 97298, 1063588},
      {10, "5*13^3", "4*14^3", 371703, 1097381},
      {11, "25022^3", "11*11251^3", 217358, 1352125},
      {12, "9*29^3", "4*38^3", 34767, 1185798},
      // 57^3 would leave a/(13 b) without a rational cube root.
      {13, "87^3", "13*37^3", 55205, 1406955},
      {15, "5^2", "3*2^3", 245733, 1571507},
      {17, "18^3", "17*7^3", 169765, 1536142},
      {18, "9*29^3", "4*38^3", 300238, 3143844},
      {19, "19*3^3", "8^3", 138226, 521398},
      {20, "20*7^3", "19^3", 72509, 1840473},
      {22, "11*5^3", "4*7^3", 232141, 595645},
      {25, "239645788^3", "5*140145707^3", 20862, 2449303},
      {26, "3^3", "26", 252311, 1722109},
      {28, "28", "3^3", 275575, 1654773},
      {30, "10", "9", 228793, 197558},
      {31, "22^3", "31*7^3", 205544, 1643436},
      {36, "467^3", "6*257^3", 238549, 2799247},
      {37, "10^3", "37*3^3", 494731, 6591064},
      {39, "39^2*2^3", "23^3", 309275, 483161},
      {41, "100^3", "41*29^3", 321697, 417960093},
      {42, "49", "6*2^3", 408968, 409489},
      {43, "43*2^3", "7^3", 227706, 1359766},
      {44, "44*2^3", "7^3", 260709, 370994},
      {49, "44^3", "7*23^3", 273736, 1716211},
      {50, "20*7^3", "19^3", 54577, 2055429},
      {52, "2*2^3", "13", 379989, 3958641},
      {57, "57*33^3", "127^3", 110601, 847651},
      {58, "4*2^3", "29", 172932, 139963},
      {60, "2*2^3", "15", 44247, 461876},
      {61, "4^3", "61", 76517, 3405348},
      {62, "4*2^3", "31", 400816, 330326},
      {63, "4^3", "63", 168229, 2664200},
      {65, "65", "4^3", 183363, 16950688},
      {66, "33", "4*2^3", 179933, 589781},
      {67, "67", "4^3", 419845, 937766},
      {68, "17", "2*2^3", 121095, 1059335},
      {70, "35", "4*2^3", 376116, 582245},
      {76, "19*1111^3", "2*2353^3", 300013, 575574},
      {78, "47^3", "78*11^3", 421553, 1145724},
      {83, "83*58^3", "253^3", 431244, 434543},
      {84, "84*33856^3", "148273^3", 236330, 5018560},
      {90, "3*3^3", "10*2^3", 43615, 314175},
      {91, "9^3", "91*2^3", 123567, 416579},
      {98, "28", "3^3", 274960, 23166836},
      {100, "5*13^3", "4*14^3", 336362, 1383591},
  };
  return rows;
}

ExactInt eval_product(const std::string& expr) {
  ExactInt out = 1;
  std::size_t pos = 0;
  while (pos <= expr.size()) {
    std::size_t star = expr.find('*', pos);
    if (star == std::string::npos) star = expr.size();
    const std::string factor = expr.substr(pos, star - pos);
    const std::size_t caret = factor.find('^');
    if (caret == std::string::npos) {
      out *= parse_int(factor);
    } else {
      out *= ipow(parse_int(factor.substr(0, caret)), to_int64(parse_int(factor.substr(caret + 1))));
    }
    pos = star + 1;
  }
  return out;
}

}  // namespace irm
