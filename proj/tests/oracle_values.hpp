// SPDX-License-Identifier: Apache-2.0
//
// High-precision reference values for the test suite, computed with an
// independent arbitrary-precision evaluation of the model definitions.
// Regenerate rather than edit by hand.

#ifndef SEABEAM_TESTS_ORACLE_VALUES_HPP
#define SEABEAM_TESTS_ORACLE_VALUES_HPP

#include <cstddef>

namespace oracle {

inline constexpr double bessel_x[] = {
    0.250000, 0.500000, 0.750000, 1.00000, 1.25000, 1.50000, 1.75000, 2.00000, 2.25000, 2.50000, 2.75000, 3.00000, 3.25000, 3.50000, 3.75000, 4.00000, 4.25000, 4.50000, 4.75000, 5.00000, 5.25000, 5.50000, 5.75000, 6.00000, 6.25000, 6.50000, 6.75000, 7.00000, 7.25000, 7.50000, 7.75000, 8.00000, 8.25000, 8.50000, 8.75000, 9.00000, 9.25000, 9.50000, 9.75000, 10.0000, 10.2500, 10.5000, 10.7500, 11.0000, 11.2500, 11.5000, 11.7500, 12.0000, 12.2500, 12.5000, 12.7500, 13.0000, 13.2500, 13.5000, 13.7500, 14.0000, 14.2500, 14.5000, 14.7500, 15.0000, 15.2500, 15.5000, 15.7500, 16.0000, 16.2500, 16.5000, 16.7500, 17.0000, 17.2500, 17.5000, 17.7500, 18.0000, 18.2500, 18.5000, 18.7500, 19.0000, 19.2500, 19.5000, 19.7500, 20.0000};
inline constexpr double bessel_j1[] = {
    0.12402597732272692, 0.24226845767487389, 0.34924360217486219, 0.44005058574493352,
    0.51062326031988047, 0.55793650791009964, 0.58015619763899250, 0.57672480775687339,
    0.54837835664696016, 0.49709410246427404, 0.42597230295790234, 0.33905895852593646,
    0.24111968801520389, 0.13737752736232719, 0.033229349129679729, -0.066043328023549136,
    -0.15555319297834271, -0.23106043192337063, -0.28918679864711041, -0.32757913759146522,
    -0.34501397857943768, -0.34143821542904335, -0.31794452391933269, -0.27668385812756561,
    -0.22072087753923727, -0.15384130140997184, -0.080322785255277216, -0.0046828234823458327,
    0.068581700653131745, 0.13524842757970551, 0.19160259218911781, 0.23463634685391462,
    0.26220355199274382, 0.27312196367405374, 0.26721789148628161, 0.24531178657332527,
    0.20914665047012112, 0.16126443075752985, 0.10483850125849751, 0.043472746168861437,
    -0.019020455696868567, -0.078850014227331488, -0.13247010254299020, -0.17678529895672150,
    -0.20932517962472062, -0.22837862066532347, -0.23308058827396429, -0.22344710449062761,
    -0.20035719875585499, -0.16548380461475972, -0.12117855082319187, -0.070318052121778371,
    -0.016121474234366946, 0.038049292086001423, 0.088894646741791248, 0.13337515469879325,
    0.16889055348599345, 0.19342946359604696, 0.20568127148618629, 0.20510403861352276,
    0.19194500945467446, 0.16721318035174714, 0.13260627465763901, 0.090397175661304186,
    0.043287237340532081, -0.0057642137356312270, -0.053723561918893513, -0.097668492757780650,
    -0.13496424275615053, -0.16341996942575491, -0.18141603687685871, -0.18799488548806959,
    -0.18291044742494147, -0.16663364001001603, -0.14031415810184220, -0.10570143114240927,
    -0.065030051218585300, -0.020877070148097522, 0.023999816388423013, 0.066833124175850046};
inline constexpr double bessel_j3[] = {
    0.00032425125267590813, 0.0025637299945872441, 0.0084843834232741088, 0.019563353982668406,
    0.036868359649794676, 0.060963951141139631, 0.091850943525377995, 0.12894324947440205,
    0.17108400218307934, 0.21660039103911352, 0.26339419351242744, 0.30906272225525164,
    0.35104295646664991, 0.38677011171688137, 0.41384091697379070, 0.43017147387562194,
    0.43413979789302673, 0.42470397297745560, 0.40148824277605096, 0.36483123061366699,
    0.31579271613191565, 0.25611786514010700, 0.18816036277775579, 0.11476838482077530,
    0.039139607850138612, -0.035346631285922615, -0.10531047907888453, -0.16755558799533424,
    -0.21924533340150819, -0.25806091319346031, -0.28233200580344230, -0.29113220706595225,
    -0.28433347880647230, -0.26261620385768479, -0.22743401432445563, -0.18093519033665684,
    -0.12584495955544809, -0.065315313215343831, -0.0027508569084113760, 0.058379379305186812,
    0.11473342012777283, 0.16328016437336258, 0.20146503812490511, 0.22734803305806742,
    0.23970629124923723, 0.23809546488319881, 0.22286648136195555, 0.19513693953109268,
    0.15671899797243422, 0.11000813631434927, 0.057839427130867661, 0.0033198169704070508,
    -0.050353728178964644, -0.10007958355844934, -0.14302955527061419, -0.17680940686509600,
    -0.19959261795485134, -0.21021979242284099, -0.20825819364366987, -0.19401825782012263,
    -0.16852648232976852, -0.13345665257394449, -0.091023806314850741, -0.043847495425981134,
    0.0052073351220916415, 0.053202274429654287, 0.097299920363982525, 0.13493057304919323,
    0.16394136075207985, 0.18271913063588380, 0.19028006220813001, 0.18632099329078039,
    0.17122976347623843, 0.14605433860651223, 0.11243293438227840, 0.072489661438052575,
    0.028702231626885247, -0.016250122673252289, -0.059649251243739638, -0.098901394560449676};
inline constexpr std::size_t bessel_count = sizeof(bessel_x) / sizeof(bessel_x[0]);

inline constexpr double j1_at_1 = 0.44005058574493352;
inline constexpr double j3_at_2 = 0.12894324947440205;

inline constexpr double los_50_0 = 25240.889445500925;
inline constexpr double los_50_10 = 36528.940650204065;

inline constexpr double fsl_550km_e1 = 4.0422114042212006e-8;
inline constexpr double fsl_550km_e2 = 7.3494752804021829e-14;
inline constexpr double fsl_1km_e1 = 2.2232162723216603e-5;

inline constexpr double shore_amp_1km = 0.00029653909570171730;
inline constexpr double shore_amp_5km = 1.9627269526342185e-5;
inline constexpr double shore_null_distance = 533.70255231704328;

inline constexpr double beam_factor_3db = 0.50000040833278672;
inline constexpr double beam_factor_1 = 0.85434164864546769;
inline constexpr double beam_factor_5 = 0.0052292394848155812;

inline constexpr double rain_amp_x0 = 0.89125093813374553;

inline constexpr double cx_k1_0 = 4;
inline constexpr double cx_m1_0 = 8;
inline constexpr double cx_k2_0 = 6;
inline constexpr double cx_m2_0 = 8;
inline constexpr double cx_eta_0 = 0.100000;
inline constexpr double cx_c1_0 = 1100424814.8836365;
inline constexpr double cx_c2_0 = 4659896271.3156314;
inline constexpr double cx_k1_1 = 1;
inline constexpr double cx_m1_1 = 1;
inline constexpr double cx_k2_1 = 1;
inline constexpr double cx_m2_1 = 1;
inline constexpr double cx_eta_1 = 0.500000;
inline constexpr double cx_c1_1 = 23.567004139038141;
inline constexpr double cx_c2_1 = 29.448560068742811;
inline constexpr double cx_k1_2 = 2;
inline constexpr double cx_m1_2 = 4;
inline constexpr double cx_k2_2 = 3;
inline constexpr double cx_m2_2 = 5;
inline constexpr double cx_eta_2 = 0.0100000;
inline constexpr double cx_c1_2 = 2696784.7619206887;
inline constexpr double cx_c2_2 = 44927026.037237662;

} // namespace oracle

#endif
