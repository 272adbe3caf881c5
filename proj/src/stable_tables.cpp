#include "stable_tables.hpp"

namespace portes::detail {

// Quantile-ratio inversion tables for the stable quantile estimation method,
// tabulated at the classical grid points. Rows/cols carry the grid values;
// cells past the beta = 1 boundary are linear-extension knots that keep the
// bilinear interpolation on the inverse map (queries clamp to [-1, 1]).

const std::array<double, 15> kAlphaTable_rows = {
    2.439, 2.5, 2.6, 2.7, 2.8, 3, 3.2, 3.5, 4, 5, 6, 8, 10, 15, 25};
const std::array<double, 7> kAlphaTable_cols = {
    0, 0.1, 0.2, 0.3, 0.5, 0.7, 1};
const std::array<std::array<double, 7>, 15> kAlphaTable = {{
    {{1.999483499, 1.999483544, 1.999483544, 1.999483544, 1.999483544, 1.999483544, 1.999483544}},
    {{1.915521167, 1.918168242, 1.918168242, 1.918168242, 1.918168242, 1.918168242, 1.918168242}},
    {{1.809012016, 1.812858282, 1.816481549, 1.816481549, 1.816481549, 1.816481549, 1.816481549}},
    {{1.727412765, 1.728563403, 1.73471754, 1.734725318, 1.734725318, 1.734725318, 1.734725318}},
    {{1.66177591, 1.661224184, 1.661527686, 1.664483969, 1.664483969, 1.664483969, 1.664483969}},
    {{1.560007783, 1.557660538, 1.55175603, 1.546284247, 1.546393641, 1.546393641, 1.546393641}},
    {{1.482042831, 1.478981509, 1.470511606, 1.459075156, 1.44971812, 1.44971812, 1.44971812}},
    {{1.390665442, 1.387325018, 1.377741601, 1.363272157, 1.334410525, 1.333656453, 1.333656453}},
    {{1.277339611, 1.274116887, 1.264750482, 1.250068371, 1.211029912, 1.192532906, 1.192532906}},
    {{1.125651384, 1.12290579, 1.114850908, 1.102009274, 1.065693253, 1.024062787, 1.017299346}},
    {{1.025187606, 1.022858113, 1.015958594, 1.0048121, 0.9724489622, 0.933052001, 0.911276818}},
    {{0.8964299311, 0.8946765145, 0.8894165572, 0.880769446, 0.8544085239, 0.8205179598, 0.7857769935}},
    {{0.8153256635, 0.813915626, 0.8096581636, 0.8026208599, 0.780500981, 0.7504785704, 0.7115225119}},
    {{0.6982197192, 0.6972387052, 0.6942322351, 0.6892654908, 0.6733555617, 0.6497290085, 0.6088749325}},
    {{0.5894812882, 0.5888161736, 0.5867314775, 0.5832934402, 0.5723065617, 0.5553611485, 0.5164350426}},
}};

const std::array<double, 15> kBetaTable_rows = {
    2.439, 2.5, 2.6, 2.7, 2.8, 3, 3.2, 3.5, 4, 5, 6, 8, 10, 15, 25};
const std::array<double, 7> kBetaTable_cols = {
    0, 0.1, 0.2, 0.3, 0.5, 0.7, 1};
const std::array<std::array<double, 7>, 15> kBetaTable = {{
    {{0, 287.8276889, 575.6553778, 863.4830667, 1439.138444, 2014.793822, 2878.276889}},
    {{0, 1.737430753, 3.474861505, 5.212292258, 8.687153764, 12.16201527, 17.37430753}},
    {{0, 0.7115285077, 1.482224726, 2.223337089, 3.705561816, 5.187786542, 7.411123631}},
    {{0, 0.4571685072, 0.9995545465, 1.499477748, 2.499129579, 3.498781411, 4.998259159}},
    {{0, 0.3464676718, 0.7306717314, 1.16778747, 1.946312451, 2.724837431, 3.892624901}},
    {{0, 0.2459345855, 0.5011768829, 0.7971152872, 1.418986594, 1.986581231, 2.837973187}},
    {{0, 0.1997522958, 0.4009900895, 0.6149916364, 1.164235233, 1.629929327, 2.328470467}},
    {{0, 0.1639234931, 0.3263029051, 0.4892548725, 0.9213170187, 1.34592373, 1.922748185}},
    {{0, 0.1345417227, 0.2672392605, 0.3974762813, 0.6696978012, 1.117270748, 1.596101068}},
    {{0, 0.1081262102, 0.2151720516, 0.3205119313, 0.5292357404, 0.793462643, 1.333045429}},
    {{0, 0.09488531954, 0.1891831168, 0.2825475466, 0.468448304, 0.6742437581, 1.222663243}},
    {{0, 0.08070290861, 0.1613189095, 0.2418449711, 0.4044169857, 0.5827050618, 1.126516866}},
    {{0, 0.07281829561, 0.1457828908, 0.219070896, 0.3686193094, 0.5338314655, 1.084481069}},
    {{0, 0.06231861562, 0.1250142746, 0.18844403, 0.3200936467, 0.4684539411, 1.042327287}},
    {{0, 0.0530712155, 0.1066469353, 0.1611650196, 0.2760503565, 0.4091326699, 1.018486148}},
}};

const std::array<double, 16> kIqrTable_rows = {
    0.5, 0.6, 0.7, 0.8, 0.9, 1, 1.1, 1.2, 1.3, 1.4, 1.5, 1.6, 1.7, 1.8, 1.9, 2};
const std::array<double, 5> kIqrTable_cols = {
    0, 0.25, 0.5, 0.75, 1};
const std::array<std::array<double, 5>, 16> kIqrTable = {{
    {{2.56766555, 3.051463814, 4.507601253, 6.600270472, 9.093519892}},
    {{2.324207927, 2.621975457, 3.527839565, 4.789850538, 6.222852202}},
    {{2.18012844, 2.382507108, 2.994906725, 3.832951148, 4.761421529}},
    {{2.091069471, 2.237292635, 2.66986795, 3.257615364, 3.903464362}},
    {{2.035166815, 2.143916953, 2.45601479, 2.881128228, 3.349932402}},
    {{2, 2.081036397, 2.307842613, 2.620058405, 2.968580447}},
    {{1.977704663, 2.03712741, 2.201459248, 2.431558657, 2.69324565}},
    {{1.963074401, 2.005556248, 2.123201062, 2.291602723, 2.487682888}},
    {{1.952757881, 1.982221556, 2.064680819, 2.185765185, 2.330635651}},
    {{1.944734806, 1.964446387, 2.020432665, 2.10489586, 2.20898366}},
    {{1.937866363, 1.950445956, 1.9867242, 2.042924421, 2.114324518}},
    {{1.931547454, 1.939037344, 1.960933479, 1.995681299, 2.041150801}},
    {{1.925475715, 1.929452569, 1.941207475, 1.960243962, 1.985825384}},
    {{1.919512863, 1.921208771, 1.926262277, 1.9345735, 1.945984748}},
    {{1.913606115, 1.914020346, 1.915260876, 1.917321259, 1.920190904}},
    {{1.907745105, 1.907745105, 1.907745105, 1.907745105, 1.907745105}},
}};

const std::array<double, 16> kShiftTable_rows = {
    0.5, 0.6, 0.7, 0.8, 0.9, 1, 1.1, 1.2, 1.3, 1.4, 1.5, 1.6, 1.7, 1.8, 1.9, 2};
const std::array<double, 5> kShiftTable_cols = {
    0, 0.25, 0.5, 0.75, 1};
const std::array<std::array<double, 5>, 16> kShiftTable = {{
    {{0, -0.06087670608, -0.2794292121, -0.6587156183, -1.198109338}},
    {{0, -0.07762663809, -0.2719811022, -0.5809966743, -0.9966381093}},
    {{0, -0.08887289024, -0.2620597054, -0.5197430098, -0.8532687185}},
    {{0, -0.09550946733, -0.2504873233, -0.4685343811, -0.7427051168}},
    {{0, -0.09831143485, -0.2375963837, -0.4238381756, -0.6524695257}},
    {{0, -0.09795749767, -0.2234921057, -0.3834775087, -0.5756301439}},
    {{-0, -0.0950352221, -0.2081786952, -0.34598085, -0.5079608297}},
    {{-0, -0.09003055216, -0.191620142, -0.310271143, -0.4466712547}},
    {{-0, -0.08332106383, -0.173763672, -0.2755016603, -0.3897747476}},
    {{-0, -0.0751790096, -0.154540421, -0.2409596375, -0.3357417464}},
    {{-0, -0.06578011644, -0.1338530423, -0.2060009728, -0.2832893145}},
    {{-0, -0.05521246914, -0.1115561312, -0.1699965687, -0.2312356792}},
    {{-0, -0.04348137242, -0.08743116181, -0.1322780469, -0.1783809148}},
    {{-0, -0.03050728291, -0.06115354607, -0.09207234698, -0.1233870181}},
    {{-0, -0.01611370725, -0.03224519562, -0.04841206569, -0.06463156234}},
    {{-0, -3.061616998e-17, -6.123233996e-17, -9.184850994e-17, -1.224646799e-16}},
}};

}  // namespace portes::detail
