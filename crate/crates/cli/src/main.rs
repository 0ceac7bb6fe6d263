fn main() {
    println!("pfisterlab");
}
