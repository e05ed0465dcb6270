#pragma once

// Globally adaptive Gauss-Kronrod (7/15) integration over a pre-split set of
// panels. Panels are refined by bisection, largest error first, until the
// summed error estimate meets max(abs_tol, rel_tol * |I|).

#include "vdl/errors.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <queue>
#include <string>
#include <vector>

namespace vdl::quadrature
{
    struct Estimate
    {
        double value = 0.0;
        double error = 0.0;
        std::size_t panels = 0;
    };

    struct Panel
    {
        double a;
        double b;
        double value;
        double error;

        bool operator<(const Panel &other) const { return error < other.error; }
    };

    template <class Func>
    Panel gauss_kronrod_15(const Func &f, double a, double b)
    {
        static constexpr double xgk[8] = {
            0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
            0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
            0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
            0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
        static constexpr double wgk[8] = {
            0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
            0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
            0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
            0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
        static constexpr double wg[4] = {
            0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
            0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

        const double center = 0.5 * (a + b);
        const double half = 0.5 * (b - a);

        const double fc = f(center);
        double kronrod = wgk[7] * fc;
        double gauss = wg[3] * fc;
        double resabs = std::abs(kronrod);
        for (int j = 0; j < 7; ++j)
        {
            const double dx = half * xgk[j];
            const double f1 = f(center - dx);
            const double f2 = f(center + dx);
            kronrod += wgk[j] * (f1 + f2);
            resabs += wgk[j] * (std::abs(f1) + std::abs(f2));
            if (j % 2 == 1)
                gauss += wg[j / 2] * (f1 + f2);
        }
        kronrod *= half;
        gauss *= half;
        resabs *= std::abs(half);

        const double roundoff = 50.0 * std::numeric_limits<double>::epsilon() * resabs;
        return {a, b, kronrod, std::max(std::abs(kronrod - gauss), roundoff)};
    }

    /// Integrate f over [a, b] split into `initial_panels` equal panels.
    /// Throws NumericalError carrying the achieved estimate if the
    /// tolerance is not met within max_panels.
    template <class Func>
    Estimate integrate(const Func &f, double a, double b, std::size_t initial_panels, double rel_tol, double abs_tol,
                       std::size_t max_panels)
    {
        initial_panels = std::max<std::size_t>(initial_panels, 1);
        std::priority_queue<Panel> heap;
        double total = 0.0;
        double total_error = 0.0;
        const double width = (b - a) / double(initial_panels);
        for (std::size_t i = 0; i < initial_panels; ++i)
        {
            const double lo = a + width * double(i);
            const double hi = (i + 1 == initial_panels) ? b : a + width * double(i + 1);
            Panel p = gauss_kronrod_15(f, lo, hi);
            total += p.value;
            total_error += p.error;
            heap.push(p);
        }

        auto target = [&] { return std::max(abs_tol, rel_tol * std::abs(total)); };
        while (total_error > target())
        {
            if (heap.size() >= max_panels)
                throw NumericalError("quadrature: tolerance not met with " + std::to_string(heap.size()) +
                                         " panels (error estimate " + std::to_string(total_error) + ")",
                                     total, total_error);
            const Panel worst = heap.top();
            heap.pop();
            const double mid = 0.5 * (worst.a + worst.b);
            const Panel left = gauss_kronrod_15(f, worst.a, mid);
            const Panel right = gauss_kronrod_15(f, mid, worst.b);
            total += left.value + right.value - worst.value;
            total_error += left.error + right.error - worst.error;
            heap.push(left);
            heap.push(right);
        }

        // Re-sum from the final panel set to drop accumulated update roundoff.
        Estimate out;
        out.panels = heap.size();
        std::vector<Panel> panels;
        panels.reserve(heap.size());
        while (!heap.empty())
        {
            panels.push_back(heap.top());
            heap.pop();
        }
        std::sort(panels.begin(), panels.end(), [](const Panel &x, const Panel &y) { return x.a < y.a; });
        for (const Panel &p : panels)
        {
            out.value += p.value;
            out.error += p.error;
        }
        return out;
    }
}
