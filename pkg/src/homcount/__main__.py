from homcount.cli import main

main()
