#ifndef STABLEORDERS_TESTS_ORACLE_VALUES_HPP
#define STABLEORDERS_TESTS_ORACLE_VALUES_HPP

// Generated by tests/oracles/generate_oracles.py; do not edit by hand.

namespace oracle {

struct Point2 {
  double a, x, value;
};

// E_a(-x).
inline constexpr Point2 kMittagLeffler[] = {
    {0.1, 0.01, 0.98959643929735484722},
    {0.1, 0.5, 0.6543244602880019291},
    {0.1, 2, 0.32001533595972739937},
    {0.1, 5, 0.15804238235845182842},
    {0.1, 30, 0.030265975870874652001},
    {0.1, 1000, 0.00093492055360589073893},
    {0.3, 0.01, 0.98896846165720317744},
    {0.3, 0.5, 0.63264900594359902138},
    {0.3, 2, 0.29023222616787535326},
    {0.3, 5, 0.13708086902027063758},
    {0.3, 30, 0.025182617502927663063},
    {0.3, 1000, 0.00076993246495257768237},
    {0.5, 0.01, 0.98881546104634251056},
    {0.5, 0.5, 0.61569034419292587487},
    {0.5, 2, 0.25539567631050574387},
    {0.5, 5, 0.11070463773306862637},
    {0.5, 30, 0.018795888861416751497},
    {0.5, 1000, 0.0005641893014533876542},
    {0.7, 0.01, 0.98907457735011664498},
    {0.7, 0.5, 0.60514759205956427126},
    {0.7, 2, 0.21378672701529726519},
    {0.7, 5, 0.077569357764769801692},
    {0.7, 30, 0.011444251527526971691},
    {0.7, 1000, 0.00033454145717409954579},
    {0.9, 0.01, 0.98966186803536587223},
    {0.9, 0.5, 0.60340549869586096762},
    {0.9, 2, 0.16352830001693004885},
    {0.9, 5, 0.034431324804098423905},
    {0.9, 30, 0.0037137076984598529581},
    {0.9, 1000, 0.00010528835943209591488},
};

// Kanter function b_a(u).
inline constexpr Point2 kKanterB[] = {
    {0.3, 0.001, 1.8420208661336863122},
    {0.3, 0.25, 1.7233355813296695895},
    {0.3, 0.5, 1.373945011840507574},
    {0.3, 0.9, 0.35771412074806727101},
    {0.5, 0.001, 1.9999975325994070666},
    {0.5, 0.25, 1.8477590650225735123},
    {0.5, 0.5, 1.4142135623730950488},
    {0.5, 0.9, 0.31286893008046173802},
    {0.8, 0.001, 1.6493835861639237924},
    {0.8, 0.25, 1.5676299985856231888},
    {0.8, 0.5, 1.3165533629168109863},
    {0.8, 0.9, 0.4312741150870322508},
};

// CDF of c_rho X+(1, rho), by quadrature of its density.
inline constexpr Point2 kCauchyBranchCdf[] = {
    {0.3, 0.1, 0.070042885861403158897},
    {0.3, 1, 0.45882614220714687452},
    {0.3, 3, 0.73430749894836146682},
    {0.3, 50, 0.9802724732153858094},
    {0.5, 0.1, 0.040473854308028591858},
    {0.5, 1, 0.3609070732281083733},
    {0.5, 3, 0.69292778517936620762},
    {0.5, 50, 0.98000657584264847095},
    {0.7, 0.1, 0.013828643957108460258},
    {0.7, 1, 0.16502849426727223011},
    {0.7, 3, 0.54383590200706476871},
    {0.7, 50, 0.97935400165398524149},
};

// Kolmogorov survival Q(lambda) from scipy.
inline constexpr double kKolmogorov[][2] = {
    {0.3, 0.9999906941986655},
    {0.6, 0.8642827790506042},
    {1.0, 0.26999967167735456},
    {1.36, 0.049485876755377876},
    {2.0, 0.0006709252557796953},
};

// {a, mass, mean} of the Y_a density.
inline constexpr double kYAlpha[][3] = {
    {0.6, 1.0, 1.0},
    {0.7, 1.0, 1.0},
    {0.9, 1.0, 1.0},
};

inline constexpr double kMedianHalfStable = 1.099054669158866202;
inline constexpr double kMedianSCeiling = 0.22746821155978637597;
inline constexpr double kE_half_minus_one = 0.42758357615580700441;
inline constexpr double kModeThreshold = 0.59061610914964124974;

struct PlanMoment {
  int n, p;
  double s, value;
};
inline constexpr PlanMoment kPlanMoments[] = {
    {2, 1, 0.25, 0.97774106744692379763},
    {2, 1, 1, 2.0},
    {2, 1, 2, 12.0},
    {5, 2, 0.25, 1.2784570901414608395},
    {5, 2, 1, 60.0},
    {5, 2, 2, 1.512e+5},
    {7, 5, 0.25, 1.4195543041412979309},
    {7, 5, 1, 42.0},
    {7, 5, 2, 24024.0},
};

inline constexpr double kJoeMoments[][2] = {
    {0.5, 1.0179900863352026592},
    {1.0, 1.2415363678537840287},
    {2.0, 2.5051051556357205568},
};

inline constexpr double kCxKLimitAtZero_02_04 = 0.90768077959239128851;

}  // namespace oracle

#endif
