//! Generates knot-list table files for prime alternating knots.
//!
//! Writes one file per crossing number, `<out>/<n>a.txt`, with one named PD
//! code per line in the format the sieve's knot-list parser reads.

use clap::Parser;
use persieve_tablegen::naming::build_table;
use std::fs;
use std::io::Write;
use std::path::PathBuf;

#[derive(Parser)]
#[command(about = "generate prime alternating knot tables")]
struct Args {
    /// smallest crossing number to generate
    #[arg(long, default_value_t = 3)]
    min: usize,
    /// largest crossing number to generate
    #[arg(long, default_value_t = 12)]
    max: usize,
    /// output directory
    #[arg(long, default_value = "tables")]
    out: PathBuf,
}

fn main() {
    let args = Args::parse();
    fs::create_dir_all(&args.out).expect("create output directory");
    for n in args.min..=args.max {
        let start = std::time::Instant::now();
        let table = build_table(n);
        let mut text = String::new();
        text.push_str(&format!(
            "# Prime alternating knots with {n} crossings ({} knots),\n\
             # named in ascending canonical pairing-code order.\n",
            table.len()
        ));
        for e in &table {
            text.push_str(&format!("{} {}\n", e.name, e.diagram.to_pd_string()));
        }
        let path = args.out.join(format!("{n}a.txt"));
        let tmp = args.out.join(format!(".{n}a.txt.tmp"));
        let mut f = fs::File::create(&tmp).expect("create table file");
        f.write_all(text.as_bytes()).expect("write table file");
        f.sync_all().ok();
        drop(f);
        fs::rename(&tmp, &path).expect("finalize table file");
        eprintln!("wrote {} ({} knots, {:.1}s)", path.display(), table.len(), start.elapsed().as_secs_f64());
    }
}
