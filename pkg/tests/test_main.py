import main


def test_main_builds_small_cycle(capsys):
    status = main.main(['build', '--n', '3', '--i', '0'])

    assert status == 0
    assert capsys.readouterr().out == '1,4,5,2,4,3\n'
