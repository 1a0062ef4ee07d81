//! Writes the small fixtures as JSON tensor files (default directory
//! `data/`) and reads them back. These are the inputs the `tginv` CLI takes.

use std::path::PathBuf;

use tensor_ginv::fixtures::{mp_counterexample, one_four_counterexample};
use tensor_ginv::io::{read_tensor, write_tensor};
use tensor_ginv::DenseTensor;

fn main() -> tensor_ginv::Result<()> {
    let dir = std::env::args().nth(1).map_or_else(|| PathBuf::from("data"), PathBuf::from);
    std::fs::create_dir_all(&dir)?;
    let mp = mp_counterexample();
    let ex14 = one_four_counterexample();
    let files: [(&str, DenseTensor); 6] = [
        ("a.json", mp.a),
        ("b.json", mp.b),
        ("identity.json", DenseTensor::unit(&[2, 2])?),
        ("a14.json", ex14.a),
        ("b14.json", ex14.b),
        ("a14_inv.json", ex14.a_inv),
    ];
    for (name, t) in &files {
        let path = dir.join(name);
        write_tensor(&path, t)?;
        assert_eq!(&read_tensor(&path)?, t);
        println!("wrote {} {}", path.display(), t.shape());
    }
    Ok(())
}
