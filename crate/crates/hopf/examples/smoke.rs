use hopf_core::fixtures::sweedler;
use hopf_core::trimodule_algebra::b_dot_b;
use hopf_core::comodule::cotensor;
use exact_kernel::LinearMap;
use std::time::Instant;
use num_traits::Zero;

fn main() {
    let base = sweedler();
    let bb = b_dot_b(base.clone()).unwrap();
    let sq = cotensor(bb.carrier().view(), bb.carrier().view()).unwrap();
    let sqb = sq.to_bicomodule().unwrap();
    // manually assemble the nested condition like cotensor() does
    let t0 = Instant::now();
    let id_a = LinearMap::identity(16, base.field());
    let id_w = LinearMap::identity(64, base.field());
    let part1 = sqb.rho().tensor(&id_a).unwrap();
    println!("tensor1 {}x{} nnz={} in {:?}", part1.rows(), part1.cols(),
        part1.entries().iter().filter(|e| !e.is_zero()).count(), t0.elapsed());
    let t0 = Instant::now();
    let part2 = id_w.tensor(bb.carrier().lambda()).unwrap();
    println!("tensor2 nnz={} in {:?}", part2.entries().iter().filter(|e| !e.is_zero()).count(), t0.elapsed());
    let t0 = Instant::now();
    let cond = part1.sub(&part2).unwrap();
    println!("sub in {:?}, nnz={}", t0.elapsed(), cond.entries().iter().filter(|e| !e.is_zero()).count());
    let t0 = Instant::now();
    let kern = exact_kernel::kernel_basis(&cond);
    println!("kernel dim {} in {:?}", kern.dim(), t0.elapsed());
    let t0 = Instant::now();
    let incl_nnz: usize = sq.subspace().basis().iter().map(|r| r.iter().filter(|e| !e.is_zero()).count()).sum();
    println!("S_AA basis nnz={} ({} vectors) scan {:?}", incl_nnz, sq.dim(), t0.elapsed());
}
