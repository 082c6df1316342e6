//! Writes and re-reads signal and tomogram files.

use fractomo::io::{read_signal, read_tomogram, write_signal, write_tomogram};
use fractomo::{
    generate_test_signal, tomogram_via_frft, TestSignal, TomographyParams, UniformGrid,
};

fn main() -> fractomo::Result<()> {
    let q = generate_test_signal(TestSignal::Chirp, UniformGrid::new(-4.0, 0.125, 64)?)?;
    let mut buf = Vec::new();
    write_signal(&mut buf, &q)?;
    let text = String::from_utf8_lossy(&buf);
    for line in text.lines().take(4) {
        println!("{line}");
    }
    let back = read_signal(buf.as_slice())?;
    println!("signal round trip max diff {:.1e}", back.max_abs_diff(&q)?);

    let w = tomogram_via_frft(
        &q,
        TomographyParams::new(0.5, -0.5)?,
        UniformGrid::spanning(-5.0, 5.0, 0.1)?,
    )?;
    let mut buf = Vec::new();
    write_tomogram(&mut buf, &w)?;
    println!(
        "tomogram round trip max diff {:.1e}",
        read_tomogram(buf.as_slice())?.max_abs_diff(&w)?
    );
    Ok(())
}
