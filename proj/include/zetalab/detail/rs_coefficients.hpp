// Generated by tools/gen_rs_coefficients.py. Do not edit.
#pragma once

#include <array>

namespace zetalab::detail {

// Riemann-Siegel correction terms as power series in z = p - 1/2.
inline constexpr std::array<double, 40> kRsC0 = {
    3.8268343236508977173e-1,
    0.0,
    1.7489618723100817974,
    0.0,
    2.1180252076854963732,
    0.0,
    -8.7072166705114807392e-1,
    0.0,
    -3.4733112243465167073,
    0.0,
    -1.6626947308999324496,
    0.0,
    1.2167312889192321345,
    0.0,
    1.3014304161007975773,
    0.0,
    3.0511021827361672421e-2,
    0.0,
    -3.7558030515450952428e-1,
    0.0,
    -1.0857844165640659744e-1,
    0.0,
    5.1832902999549623376e-2,
    0.0,
    2.999948061990227592e-2,
    0.0,
    -2.275939670612564226e-3,
    0.0,
    -4.3826474165803383059e-3,
    0.0,
    -4.0642301837298469931e-4,
    0.0,
    4.0060977854221139279e-4,
    0.0,
    8.9710579913888412978e-5,
    0.0,
    -2.3025650027239107116e-5,
    0.0,
    -9.3800066019067924847e-6,
    0.0,
};

inline constexpr std::array<double, 40> kRsC1 = {
    0.0,
    -5.365020525675069406e-2,
    0.0,
    1.102781874108148244e-1,
    0.0,
    1.2317200154315226313,
    0.0,
    1.2634964862799457884,
    0.0,
    -1.6951089975595030184,
    0.0,
    -2.999871196765010089,
    0.0,
    -1.0819944959899208643e-1,
    0.0,
    1.9407662946212712688,
    0.0,
    7.8384235615006865329e-1,
    0.0,
    -5.0548296679003659188e-1,
    0.0,
    -3.8450723496057974051e-1,
    0.0,
    3.7472646465315320676e-2,
    0.0,
    9.0920266109731763173e-2,
    0.0,
    1.0449237550064509218e-2,
    0.0,
    -1.2582979651583416497e-2,
    0.0,
    -3.3995037211512740851e-3,
    0.0,
    1.0410950537714891268e-3,
    0.0,
    5.0109490511184868604e-4,
    0.0,
    -3.9563596690031815595e-5,
    0.0,
    -4.7624592453571896387e-5,
};

inline constexpr std::array<double, 40> kRsC2 = {
    5.1885428302931684938e-3,
    0.0,
    1.2378633552253898413e-3,
    0.0,
    -1.8137505725166997411e-1,
    0.0,
    1.4291492748532126541e-1,
    0.0,
    1.3303391766687565325,
    0.0,
    3.5224723534037336775e-1,
    0.0,
    -2.4210015958919507238,
    0.0,
    -1.6760787022538108853,
    0.0,
    1.3689416723328372184,
    0.0,
    1.5539019430222983221,
    0.0,
    -1.722164273472998052e-1,
    0.0,
    -6.359068055045430989e-1,
    0.0,
    -9.9116498730412081054e-2,
    0.0,
    1.4033480067387008951e-1,
    0.0,
    4.7823520198272922364e-2,
    0.0,
    -1.7356040641479780798e-2,
    0.0,
    -1.0225012534028591844e-2,
    0.0,
    9.2741491597948878994e-4,
    0.0,
    1.3572194372373385345e-3,
    0.0,
    6.41369012029388009e-5,
    0.0,
};

}  // namespace zetalab::detail
