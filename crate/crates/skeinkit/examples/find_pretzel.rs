//! Temporary utility: build all-odd three-column pretzel diagrams and
//! check them against published Jones polynomials.

use num_complex::Complex64;
use skeinkit::bracket::jones_polynomial_in_a;
use skeinkit::coloring::tri_count;
use skeinkit::diagram::Diagram;

fn main() {
    for h in [1i32, -1] {
        let d = pretzel_odd3([3, 1, 3], h).unwrap();
        let f = jones_polynomial_in_a(&d).unwrap();
        println!(
            "P(3,1,3) h={h}: crossings={} writhe={} planar={} tri={} f={}",
            d.classical_count(),
            d.writhe(),
            d.is_planar(),
            tri_count(&d).unwrap(),
            f
        );
        // print the PD slots for freezing into the table
        let slots: Vec<[usize; 4]> = d.crossings().iter().map(|c| c.slots).collect();
        println!("  pd={slots:?}");
        let t = Complex64::new(0.6, 0.2);
        let v = skeinkit::bracket::jones_eval(&d, t).unwrap();
        let published = t - 2.0 * t.powi(2) + 3.0 * t.powi(3) - 2.0 * t.powi(4)
            + 3.0 * t.powi(5)
            - 2.0 * t.powi(6)
            + t.powi(7)
            - t.powi(8);
        let mirror_published = {
            let s = 1.0 / t;
            s - 2.0 * s.powi(2) + 3.0 * s.powi(3) - 2.0 * s.powi(4) + 3.0 * s.powi(5)
                - 2.0 * s.powi(6)
                + s.powi(7)
                - s.powi(8)
        };
        println!(
            "  |V - published| = {:.3e}   |V - mirror| = {:.3e}",
            (v - published).norm(),
            (v - mirror_published).norm()
        );
    }
}

/// All-odd three-column pretzel with column handedness `h`.
fn pretzel_odd3(cols: [usize; 3], h: i32) -> Result<Diagram, Box<dyn std::error::Error>> {
    use skeinkit::diagram::classical_from_passes as cr;
    use skeinkit::diagram::Sign;
    assert!(cols.iter().all(|n| n % 2 == 1));
    // connecting arcs: tops 1,2,3 then bottoms 4,5,6
    let (t12, t23, t31, b12, b23, b31) = (1usize, 2, 3, 4, 5, 6);
    let tl = [t31, t12, t23];
    let tr = [t12, t23, t31];
    let bl = [b31, b12, b23];
    let br = [b12, b23, b31];
    let mut next = 7usize;
    let mut crossings = Vec::new();
    for k in 0..3 {
        let n = cols[k];
        // edge at (level, side): level 0 = top, level n = bottom
        let mut level_l = vec![0usize; n + 1];
        let mut level_r = vec![0usize; n + 1];
        level_l[0] = tl[k];
        level_r[0] = tr[k];
        level_l[n] = bl[k];
        level_r[n] = br[k];
        for j in 1..n {
            level_l[j] = next;
            level_r[j] = next + 1;
            next += 2;
        }
        for j in 1..=n {
            let (down, up) = if j % 2 == 1 {
                // down strand on the top-left to bottom-right diagonal
                ((level_l[j - 1], level_r[j]), (level_l[j], level_r[j - 1]))
            } else {
                ((level_r[j - 1], level_l[j]), (level_r[j], level_l[j - 1]))
            };
            // h = +1: the top-left/bottom-right diagonal passes over
            let tlbr_is_down = j % 2 == 1;
            let (over, under) = if (h > 0) == tlbr_is_down {
                (down, up)
            } else {
                (up, down)
            };
            let sign = if h > 0 { Sign::Positive } else { Sign::Negative };
            crossings.push(cr(under, over, sign));
        }
    }
    Ok(Diagram::new(crossings, 0)?)
}
