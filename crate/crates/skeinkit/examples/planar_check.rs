fn main() {
    let entries = skeinkit::cli::builtin_table();
    for e in entries {
        let d = e.diagram().unwrap();
        println!("{:<10} planar={}", e.name, d.is_planar());
    }
}
