use psd3::certify::certify_h;
use psd3::test_support::SeededRats;
fn main() {
    let mut gen = SeededRats::new(31);
    for _ in 0..10 { let _ = gen.g_params_interior(); }
    for _ in 0..10 { let _ = gen.f_params_interior(); }
    for i in 0..10 {
        let (p, q) = gen.h_params_interior();
        let out = certify_h(&p, &q).unwrap();
        println!("{i}: p={p} q={q} -> {:?} {:?}", out.verdict, out.failed_step);
    }
}
