from solenoid.cli import main

main()
