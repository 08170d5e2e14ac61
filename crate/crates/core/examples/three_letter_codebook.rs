//! The θ = 45°, n = 3 codebook in both row orders.

use fock_compress::coder::{Codebook, SymbolOrder};
use fock_compress::experiments::source_at;
use fock_compress::source::{sequence_label, sequence_letters};

fn print(book: &Codebook) {
    for e in book.entries() {
        let seq = sequence_label(&sequence_letters(e.sequence, 2, book.n()), 2);
        println!("  {}  {:<4} {:.5}", seq, e.codeword.to_string(), e.probability);
    }
    println!("  L = {:.4}", book.average_length());
}

fn main() -> fock_compress::Result<()> {
    let eig = source_at(45.0)?;
    println!("published table:");
    print(&Codebook::three_letter_table(&eig)?);
    println!("canonical counting rule, H first:");
    let book = Codebook::build(&eig, 3, SymbolOrder::HFirst)?;
    print(&book);
    println!("{}", book.to_json()?);
    Ok(())
}
