#include "gofgamma/fixtures.hpp"

namespace gofgamma::fixtures {

const std::vector<double>& geiger_counter_times() {
    // 25 waiting times between radioactive-decay counter hits, in units of
    // 1/5000 minute. Classic benchmark for the gamma fit with shape 100.
    static const std::vector<double> data = {
        6.9, 5.9, 7.2, 7.6, 7.5, 7.3, 7.0, 7.1, 6.7, 5.3, 6.7, 7.1, 6.1,
        6.3, 5.4, 6.4, 6.5, 7.3, 5.7, 7.4, 6.3, 7.6, 7.6, 6.7, 6.9};
    return data;
}

const std::vector<double>& tractor_brake_times() {
    // 107 failure times of tractor rear brakes, in millions of duty cycles.
    static const std::vector<double> data = {
        56,   83,   104,  116,  244,  305,  429,  452,  453,  503,  552,
        614,  661,  673,  683,  685,  753,  763,  806,  834,  838,  862,
        897,  904,  981,  1007, 1008, 1049, 1060, 1107, 1125, 1141, 1153,
        1154, 1193, 1201, 1253, 1313, 1329, 1347, 1454, 1464, 1490, 1491,
        1532, 1549, 1568, 1574, 1586, 1599, 1608, 1723, 1769, 1795, 1927,
        1957, 2005, 2010, 2016, 2022, 2037, 2065, 2096, 2139, 2150, 2156,
        2160, 2190, 2210, 2220, 2248, 2285, 2325, 2337, 2351, 2437, 2454,
        2546, 2565, 2584, 2624, 2675, 2701, 2755, 2877, 2879, 2922, 2986,
        3092, 3160, 3185, 3191, 3439, 3617, 3685, 3756, 3826, 3995, 4007,
        4159, 4300, 4487, 5074, 5579, 5623, 6869, 7739};
    return data;
}

} // namespace gofgamma::fixtures
