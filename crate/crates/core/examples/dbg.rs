use germs::milnor::*;
use germs::poly::*;
use germs::puiseux::*;
fn main() {
    for (m, e) in [(6u64, vec![(8u64, 1i64), (9, -2), (13, 3), (14, 1)]), (8, vec![(10, 1), (11, 1), (17, 2), (20, -3)]), (8, vec![(12, 1), (14, 1), (15, 1), (19, 2)])] {
        let b = PuiseuxBranch::from_ints(m, &e).unwrap();
        let t0 = std::time::Instant::now();
        let h = implicitize(&b);
        let t1 = t0.elapsed();
        let hx = h.derivative(Var::X); let hy = h.derivative(Var::Y);
        let r = resultant(&hx, &hy, Var::Y).unwrap();
        let t2 = t0.elapsed();
        let mu = milnor_implicit_oracle(&h);
        println!("{b} terms {} imp {:?} res {:?} (len {}) oracle {:?} total {:?} formula {}", h.len(), t1, t2 - t1, r.len(), mu, t0.elapsed(), milnor_of_branch(&b).unwrap());
    }
}
