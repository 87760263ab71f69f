fn main() {
    let g = gtqd::catalog::by_name("dic12").unwrap();
    let t = std::time::Instant::now();
    let h = gtqd::cohomology::h3(&g, 12, 16).unwrap();
    println!("dic12 h3 = {:?} in {:?}", h.invariant_factors, t.elapsed());
}
