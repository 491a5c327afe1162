from orthotl.cli import main

main()
