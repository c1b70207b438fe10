from scancarrier.cli import main

main()
