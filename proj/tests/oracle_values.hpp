// Copyright 2026 The stieltjes-lab Authors
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

#pragma once

// Reference digit strings used as fixed points by the tests.  Every value
// here was produced by an independent arbitrary-precision evaluator and is
// frozen as text so that a regression in our own numerics cannot silently
// re-derive the expectation it is checked against.

namespace oracle {

// Euler's constant, 210 significant digits.
inline constexpr const char* kEuler210 =
    "0.57721566490153286060651209008240243104215933593992359880576723488486"
    "77267776646709369470632917467495146314472498070824809605040144865428"
    "36224173997644923536253500333742937337737673942792595258247094916008"
    "735204";

// Coefficients of the Laurent expansion of zeta about its pole,
// gamma_n for n = 1, 2, 3, 5, 20, 31, 61, 62.
inline constexpr const char* kGamma1_60 =
    "-0.0728158454836767248605863758749013191377363383343379525990066";
inline constexpr const char* kGamma2_60 =
    "-0.00969036319287231848453038603521252935906580610134074988070137";
inline constexpr const char* kGamma3_60 =
    "0.00205383442030334586616004654275338428571580444541061824548148";
inline constexpr const char* kGamma5_40 =
    "0.0007933238173010627017533348774444448307315";
inline constexpr const char* kGamma20_40 =
    "0.0004663435615115594494005948244335505251131";
inline constexpr const char* kGamma31_40 =
    "-0.007513325997815228933135160081576145616637";
inline constexpr const char* kGamma61_30 = "111670.957814941079338789340321";
inline constexpr const char* kGamma62_35 = "5333.6652105007643434037130722611367";

inline constexpr const char* kPi60 =
    "3.14159265358979323846264338327950288419716939937510582097494";

// zeta at a few fixed arguments (40-55 digits).
inline constexpr const char* kZeta2_55 =
    "1.644934066848226436472415166646025189218949901206798438";
inline constexpr const char* kZeta3_40 =
    "1.202056903159594285399738161511449990765";
inline constexpr const char* kZeta3Half_40 =
    "2.612375348685488343348567567924071630571";
inline constexpr const char* kHalfZeta3Half_40 =
    "1.306187674342744171674283783962035815285";
inline constexpr const char* kZetaHalf_40 =
    "-1.460354508809586812889499152515298012467";
inline constexpr const char* kZetaMinusHalf_40 =
    "-0.2078862249773545660173067253970493022263";

// Limiting continued-fraction statistics.
inline constexpr const char* kKhinchin_30 = "2.68545200106530644530971483548";
inline constexpr const char* kKhinchin_10 = "2.685452001";
inline constexpr const char* kKhinchin_4 = "2.685";
inline constexpr const char* kLevy_30 = "3.27582291872181115978768188245";
inline constexpr const char* kLevy_16 = "3.275822918721811";

inline constexpr const char* kSqrt2_50 =
    "1.4142135623730950488016887242096980785696718753769";
inline constexpr const char* kGolden_50 =
    "1.6180339887498948482045868343656381177203091798058";

// Limiting probabilities of partial quotients 1 and 2.
inline constexpr double kGaussKuzminD1 = 0.415037499278843818546261056052;
inline constexpr double kGaussKuzminD2 = 0.169925001442312362907477887896;

// H(m) - ln m - gamma_0 at m = 12366 is about 4.0433e-5 (close to 1/(2m));
// used to bound the raw truncation gap of the harmonic-sum estimator.
inline constexpr double kHarmonicGap12366 = 4.043290159e-5;

}  // namespace oracle
