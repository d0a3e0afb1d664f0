package com.acme.app;

import java.time.DayOfWeek;

/** Classic and arrow-form switch statements side by side. */
public final class SwitchStyles {

    private SwitchStyles() {}

    public static int classicOpsPerDay(DayOfWeek day) {
        int ops;
        switch (day) {
            case SATURDAY:
            case SUNDAY:
                ops = 10;
                break;
            case FRIDAY:
                ops = 70;
                break;
            default:
                ops = 100;
                break;
        }
        return ops;
    }

    public static int arrowOpsPerDay(DayOfWeek day) {
        return switch (day) {
            case SATURDAY, SUNDAY -> 10;
            case FRIDAY -> 70;
            default -> 100;
        };
    }

    public static String grade(int score) {
        return switch (score / 10) {
            case 10, 9 -> "A";
            case 8 -> "B";
            case 7 -> "C";
            case 6 -> "D";
            default -> {
                String reason = score < 0 ? "invalid" : "failing";
                yield "F (" + reason + ")";
            }
        };
    }
}
