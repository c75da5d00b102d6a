// scratch debug
use hochmod::dg::square_zero;
use hochmod::complex::Complex;
use hochmod::graded::Window;

fn main() {
    let a = square_zero("k[ε]", &Complex::line(0, "ε")).unwrap().algebra;
    match hochmod::hochschild::hochschild_chains(&a, Window::new(0, 4)) {
        Ok(_) => println!("built fine"),
        Err(e) => println!("error: {e}"),
    }
    // print b and B term-by-term for small words
    use hochmod::hochschild::debug_dump;
    debug_dump(&a, 3);
}
