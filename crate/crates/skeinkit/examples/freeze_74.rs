use skeinkit::coloring::{classify_tricolor, enumerate_tricolorings, TricolorKind};
use skeinkit::diagram::Diagram;

fn main() {
    let d = Diagram::new(
        vec![
            skeinkit::diagram::Crossing::classical([7, 8, 1, 3]),
            skeinkit::diagram::Crossing::classical([8, 7, 9, 10]),
            skeinkit::diagram::Crossing::classical([6, 4, 10, 9]),
            skeinkit::diagram::Crossing::classical([4, 5, 2, 1]),
            skeinkit::diagram::Crossing::classical([11, 12, 3, 2]),
            skeinkit::diagram::Crossing::classical([12, 11, 13, 14]),
            skeinkit::diagram::Crossing::classical([5, 6, 14, 13]),
        ],
        0,
    )
    .unwrap()
    .oriented()
    .unwrap();
    assert_eq!(d.writhe(), 7, "orientation inference must recover all-positive");
    let r = d.renumbered().unwrap();
    assert_eq!(r.writhe(), 7);
    let slots: Vec<[usize; 4]> = r.crossings().iter().map(|c| c.slots).collect();
    println!("renumbered pd={slots:?} writhe={}", r.writhe());
    // census over nontrivial tricolorings
    let all = enumerate_tricolorings(&r).unwrap().colorings.unwrap();
    for t in all.iter().filter(|t| !t.is_trivial()) {
        let mut mono = 0;
        let mut poly = 0;
        for ci in 0..r.crossings().len() {
            match classify_tricolor(&r, t, ci).unwrap().kind {
                TricolorKind::Mono => mono += 1,
                TricolorKind::Poly => poly += 1,
            }
        }
        println!("nontrivial coloring: mono={mono} poly={poly}");
    }
    println!("tricolor V values:");
    for v in skeinkit::bracket::tricolor_invariant(&r).unwrap() {
        println!("  {}", v.value);
    }
}
