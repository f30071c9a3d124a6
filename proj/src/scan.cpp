#include <algorithm>
#include <atomic>
#include <chrono>
#include <exception>
#include <thread>

#include "crossfam/solver.hpp"

namespace crossfam {

std::size_t scan_value(const PointSet& ps, const ScanQuery& q) {
    if (q.target == ScanTarget::ConvexSubset) return max_convex_subset(ps).size;
    return max_family(ps, q.pattern, q.kind).max_size;
}

ScanReport scan_order_types(const OrderTypeDb& db, const ScanQuery& q, unsigned jobs,
                            const std::function<void(std::size_t, std::size_t)>& progress) {
    const std::size_t total = db.record_count;
    jobs = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(std::max<std::size_t>(1, total))));
    struct Slice {
        std::vector<std::size_t> violators;
        std::map<std::size_t, std::size_t> histogram;
        std::exception_ptr error;
    };
    std::vector<Slice> slices(jobs);
    std::atomic<std::size_t> done{0};
    std::atomic<unsigned> finished{0};
    auto work = [&](unsigned w) {
        const std::size_t begin = total * w / jobs, end = total * (w + 1) / jobs;
        try {
            iterate(
                db,
                [&](const OrderTypeRecord& r) {
                    const std::size_t v = scan_value(r.points, q);
                    ++slices[w].histogram[v];
                    if (v < q.k) slices[w].violators.push_back(r.index);
                    done.fetch_add(1, std::memory_order_relaxed);
                },
                begin, end);
        } catch (...) {
            slices[w].error = std::current_exception();
        }
        finished.fetch_add(1);
    };
    std::vector<std::thread> pool;
    const unsigned first_threaded = progress ? 0 : 1;
    for (unsigned w = first_threaded; w < jobs; ++w) pool.emplace_back(work, w);
    if (progress) {
        while (finished.load() < jobs) {
            progress(done.load(), total);
            std::this_thread::sleep_for(std::chrono::milliseconds(100));
        }
    } else {
        work(0);
    }
    for (auto& t : pool) t.join();
    ScanReport rep;
    rep.total = total;
    for (Slice& s : slices) {
        if (s.error) std::rethrow_exception(s.error);
        rep.violators.insert(rep.violators.end(), s.violators.begin(), s.violators.end());
        for (auto [v, c] : s.histogram) rep.histogram[v] += c;
    }
    std::sort(rep.violators.begin(), rep.violators.end());
    if (progress) progress(total, total);
    return rep;
}

}  // namespace crossfam
