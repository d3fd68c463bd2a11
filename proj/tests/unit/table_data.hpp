#pragma once

#include <array>
#include <vector>

// Reference series used across the suites (the bundled CSVs transcribe
// the same numbers) plus expected values frozen from a 50-digit mpmath
// run, independent of every code path under test.

namespace testdata {

inline const std::vector<int> wig20_years = {1995, 1996, 1997, 1998, 1999, 2000, 2001, 2002,
                                             2003, 2004, 2005, 2006, 2007, 2008, 2009};
inline const std::vector<double> wig20_rates = {
    0.0820, 0.8210, 0.0110, -0.1620, 0.4380, 0.0340, -0.3346, -0.0270,
    0.3389, 0.2456, 0.3542, 0.2375,  0.0519, -0.4821, 0.3347};

inline std::vector<double> wig20_coefficients() {
    std::vector<double> a;
    a.reserve(wig20_rates.size());
    for (double r : wig20_rates) a.push_back(1.0 + r);
    return a;
}

// Frozen statistics of the wig20 series.
inline constexpr double wig20_geo_mean = 1.0820925702594546;
inline constexpr double wig20_arith_mean = 1.12954;
inline constexpr double wig20_geo_std_unbiased = 1.3708293247536299;
inline constexpr double wig20_geo_std_biased = 1.3562461673157774;
inline constexpr double wig20_fv_geometric = 3.2656243612171488;
inline constexpr double wig20_fv_arithmetic = 6.2161892174035843;
inline constexpr double wig20_pv_geometric = 0.30622015559293676;
inline constexpr double wig20_pv_arithmetic = 0.65039378680814927;
inline constexpr double wig20_train_geo_mean = 1.1036043873868708;
inline constexpr double wig20_proj_geometric = 1.6370694037069155;
inline constexpr double wig20_proj_arithmetic = 1.9653479235014453;
inline constexpr double wig20_realized = 1.2185182656416972;
// k-intervals implied by the frozen geo mean and unbiased geo std.
inline constexpr std::array<std::array<double, 2>, 3> wig20_k_intervals = {{
    {0.78937074858238, 1.4833642274096879},
    {0.57583444877373, 2.0334391822237126},
    {0.42006283231300, 2.7874980610953046},
}};

inline const std::vector<int> treasury_years = {1992, 1993, 1994, 1995, 1996, 1997,
                                                1998, 1999, 2000, 2001, 2002, 2003,
                                                2004, 2005, 2006, 2007, 2008, 2009};
// Year-level arithmetic means of the bid profitabilities.
inline const std::vector<double> treasury_values = {
    0.4864, 0.3842, 0.3238, 0.2618, 0.2054, 0.2210, 0.1851, 0.1291, 0.1761,
    0.1464, 0.0821, 0.0536, 0.0659, 0.0679, 0.0420, 0.0464, 0.0652, 0.0465};
// Year-level geometric means published alongside (consistency checks only).
inline const std::vector<double> treasury_geo_values = {
    0.4861, 0.3841, 0.3231, 0.2618, 0.2054, 0.2210, 0.1844, 0.1290, 0.1761,
    0.1462, 0.0821, 0.0536, 0.0659, 0.0508, 0.0419, 0.0464, 0.0652, 0.0465};

// Frozen trend fit with t = 1..18.
inline constexpr double treasury_alpha_hat = -0.1424892067940073;
inline constexpr double treasury_beta_hat = -0.72991647950411629;
inline constexpr double treasury_geo_mean = 0.12448576038364463;
inline constexpr double treasury_arith_mean = 0.16605;
inline constexpr double treasury_x_var = 26.916666666666667;
inline constexpr double treasury_predict_t1 = 0.41794489457919426;

// Special-function and distribution constants.
inline constexpr double k_e1_at_1 = 0.21938393439552027;
inline constexpr double k_e1_at_10 = 4.1569689296853243e-6;
inline constexpr double k_e1_at_half = 0.55977359477616081;
inline constexpr double k_gamma_sq_plus_pi2_6 = 1.9781119906559451;
inline constexpr double k_exp_neg_gamma = 0.56145948356688517;
inline constexpr double k_exp_pi2_6 = 5.1806683178971157;
inline constexpr double k_exp_gamma = 1.781072417990198;
inline constexpr double k_exp_pi_sqrt6 = 3.6058222479840882;
inline constexpr double k_sqrt6_over_pi = 0.77969680123367611;
inline constexpr double k_matched_beta_lambda1 = 0.15570914064906584;
inline constexpr double k_trunc_exp_gm_1_1 = 1.8154754009603361;
inline constexpr double k_exp_pi2_60 = 1.1787957973537632;
inline constexpr double k_exp_quarter = 1.2840254166877415;
inline constexpr double k_exp_four_fifths = 2.2255409284924676;
inline constexpr double k_fourth_root_24 = 2.2133638394006432;
inline constexpr double k_uniform_1_2_geo_mean = 1.4715177646857693;
inline constexpr double k_uniform_1_2_geo_var = 1.0398681977232804;
inline constexpr double k_crossing_lo = 1.295186801386575;
inline constexpr double k_crossing_hi = 12.744193582351889;

}  // namespace testdata
