use prodsum::search::{search_solutions, SearchConfig};
fn main() {
    let mut global_max = 0u64;
    for a in 1..=10u32 {
        let rows = search_solutions(&SearchConfig { a, height: 12 });
        let m = rows.iter().map(|r| u64::try_from(r.max_height()).unwrap()).max().unwrap_or(0);
        println!("a={a}: {} rows, max height {m}", rows.len());
        global_max = global_max.max(m);
    }
    println!("global max component height: {global_max}");
}
