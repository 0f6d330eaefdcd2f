// Compares the OpenMP kernels against their serial reference implementations
// and reports speedups. The work split is per Gram entry / per partition, so
// the two paths must agree bit for bit; the comparison is printed alongside.

#include <omp.h>

#include <cstdio>

#include "xhermite/orthogonality.hpp"
#include "xhermite/scan.hpp"

using namespace xhermite;

namespace {

bool same_matrix(const GramReport& a, const GramReport& b) {
  for (size_t i = 0; i < a.matrix.size(); ++i)
    for (size_t j = 0; j < a.matrix[i].size(); ++j)
      if (a.matrix[i][j] != b.matrix[i][j]) return false;
  return true;
}

}  // namespace

int main() {
  set_working_digits(64);
  const int threads = omp_get_max_threads();
  std::printf("threads available: %d\n\n", threads);

  {
    const Partition lam({2, 2});
    QuadOptions opts;
    // warm the quadrature rule cache so both paths time only the entries
    gram_matrix_ref(lam, 6, opts);

    const double t0 = omp_get_wtime();
    const auto ref = gram_matrix_ref(lam, 6, opts);
    const double t1 = omp_get_wtime();
    const auto par = gram_matrix(lam, 6, opts);
    const double t2 = omp_get_wtime();

    std::printf("gram 6x6 for (2,2):   serial %.3f s | openmp %.3f s | speedup %.2fx | identical: %s\n",
                t1 - t0, t2 - t1, (t1 - t0) / (t2 - t1), same_matrix(ref, par) ? "yes" : "NO");
  }

  {
    NumericContext ctx;
    const double t0 = omp_get_wtime();
    const auto ref = scan_partitions_ref(7, PartitionFilter::All, ctx);
    const double t1 = omp_get_wtime();
    const auto par = scan_partitions(7, PartitionFilter::All, ctx, threads);
    const double t2 = omp_get_wtime();

    bool same = ref.size() == par.size();
    for (size_t i = 0; same && i < ref.size(); ++i)
      same = ref[i].pass == par[i].pass && ref[i].lam == par[i].lam &&
             ref[i].worst_dg_residual == par[i].worst_dg_residual;

    std::printf("scan sizes <= 7:      serial %.3f s | openmp %.3f s | speedup %.2fx | identical: %s\n",
                t1 - t0, t2 - t1, (t1 - t0) / (t2 - t1), same ? "yes" : "NO");
  }
  return 0;
}
