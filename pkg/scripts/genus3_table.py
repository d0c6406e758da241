"""Print the self-inverse representatives of every class of genus at most three."""
from rauzy import build_self_inverse, class_key, is_transposition_lagrangian
from rauzy.builder import genus3_table


def main():
    print(f"{'signature':<14} {'kind':<14} {'representative':<24} checks")
    for key, p in genus3_table():
        ok = (build_self_inverse(key).canonical() == p and class_key(p) == key
              and is_transposition_lagrangian(p))
        print(f"{key.signature!s:<14} {key.kind:<14} {p!s:<24} {'ok' if ok else 'MISMATCH'}")


if __name__ == "__main__":
    main()
