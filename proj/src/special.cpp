#include "riscade/special.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace riscade {

namespace {

template <int N>
double eval_poly(const double (&c)[N], double x) {
    double r = c[N - 1];
    for (int i = N - 2; i >= 0; --i) r = r * x + c[i];
    return r;
}

} // namespace

double bessel_k0(double x) {
    static const double P1[] = {
        2.4708152720399552679e+03, 5.9169059852270512312e+03,
        4.6850901201934832188e+02, 1.1999463724910714109e+01,
        1.3166052564989571850e-01, 5.8599221412826100000e-04};
    static const double Q1[] = {
        2.1312714303849120380e+04, -2.4994418972832303646e+02, 1.0};
    static const double P2[] = {
        -1.6128136304458193998e+06, -3.7333769444840079748e+05,
        -1.7984434409411765813e+04, -2.9501657892958843865e+02,
        -1.6414452837299064100e+00};
    static const double Q2[] = {
        -1.6128136304458193998e+06, 2.9865713163054025489e+04,
        -2.5064972445877992730e+02, 1.0};
    static const double P3[] = {
        1.1600249425076035558e+02, 2.3444738764199315021e+03,
        1.8321525870183537725e+04, 7.1557062783764037541e+04,
        1.5097646353289914539e+05, 1.7398867902565686251e+05,
        1.0577068948034021957e+05, 3.1075408980684392399e+04,
        3.6832589957340267940e+03, 1.1394980557384778174e+02};
    static const double Q3[] = {
        9.2556599177304839811e+01, 1.8821890840982713696e+03,
        1.4847228371802360957e+04, 5.8824616785857027752e+04,
        1.2689839587977598727e+05, 1.5144644673520157801e+05,
        9.7418829762268075784e+04, 3.1474655750295278825e+04,
        4.4329628889746408858e+03, 2.0013443064949242491e+02, 1.0};

    if (x < 0.0) throw std::domain_error("bessel_k0: negative argument");
    if (x == 0.0) return std::numeric_limits<double>::infinity();

    if (x <= 1.0) {
        const double y = x * x;
        const double r1 = eval_poly(P1, y) / eval_poly(Q1, y);
        const double r2 = eval_poly(P2, y) / eval_poly(Q2, y);
        return r1 - std::log(x) * r2;
    }
    const double y = 1.0 / x;
    const double r = eval_poly(P3, y) / eval_poly(Q3, y);
    return std::exp(-x) / std::sqrt(x) * r;
}

double bessel_k1(double x) {
    static const double P1[] = {
        -2.2149374878243304548e+06, 7.1938920065420586101e+05,
        1.7733324035147015630e+05,  7.1885382604084798576e+03,
        9.9991373567429309922e+01,  4.8127070456878442310e-01};
    static const double Q1[] = {
        -2.2149374878243304548e+06, 3.7264298672067697862e+04,
        -2.8143915754538725829e+02, 1.0};
    static const double P2[] = {
        0.0,                        -1.3531161492785421328e+06,
        -1.4758069205414222471e+05, -4.5051623763436087023e+03,
        -5.3103913335180275253e+01, -2.2795590826955002390e-01};
    static const double Q2[] = {
        -2.7062322985570842656e+06, 4.3117653211351080007e+04,
        -3.0507151578787595807e+02, 1.0};
    static const double P3[] = {
        2.2196792496874548962e+00, 4.4137176114230414036e+01,
        3.4122953486801312910e+02, 1.3319486433183221990e+03,
        2.8590657697910288226e+03, 3.4540675585544584407e+03,
        2.3123742209168871550e+03, 8.1094256146537402173e+02,
        1.3182609918569941308e+02, 7.5584584631176030810e+00,
        6.4257745859173138767e-02};
    static const double Q3[] = {
        1.7710478032601086579e+00, 3.4552228452758912848e+01,
        2.5951223655579051357e+02, 9.6929165726802648634e+02,
        1.9448440788918006154e+03, 2.1181000487171943810e+03,
        1.2082692316002348638e+03, 3.3031020088765390854e+02,
        3.6001069306861518855e+01, 1.0};

    if (x < 0.0) throw std::domain_error("bessel_k1: negative argument");
    if (x == 0.0) return std::numeric_limits<double>::infinity();

    if (x <= 1.0) {
        const double y = x * x;
        const double r1 = eval_poly(P1, y) / eval_poly(Q1, y);
        const double r2 = eval_poly(P2, y) / eval_poly(Q2, y);
        return (r1 + std::log(x) * r2) / x;
    }
    const double y = 1.0 / x;
    const double r = eval_poly(P3, y) / eval_poly(Q3, y);
    return std::exp(-x) / std::sqrt(x) * r;
}

} // namespace riscade
